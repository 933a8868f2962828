"""Canonical forms, isomorphism, automorphisms and orbit analysis.

The canonical code of a connected map is a complete isomorphism invariant:
from every start flag, a breadth-first traversal that follows s0, s1, s2 in
that fixed order numbers the flags by first visit; writing each flag's image
triple in the new numbering gives one candidate code, and the lexicographic
minimum over all starts is the canonical code.  Two connected maps are
isomorphic exactly when their codes agree, and each code-minimizing start
flag yields one automorphism, so the automorphism group falls out of the same
scan for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .mapcore import CombMap, link_cycle

__all__ = [
    "CanonicalCode",
    "PermGroup",
    "GiGraph",
    "canonical_code",
    "isomorphic",
    "automorphism_group",
    "recognize_group",
    "vertex_orbits",
    "is_vertex_transitive",
    "gi_graph",
]


@dataclass(frozen=True)
class CanonicalCode:
    data: bytes

    def digest(self) -> str:
        import hashlib

        return hashlib.sha256(self.data).hexdigest()


def _traverse(m: CombMap, start: int) -> tuple[list[int], list[int]]:
    """BFS flag numbering from one start flag.

    Returns (order, num): order[k] is the original id of the k-th visited
    flag, num the inverse array.
    """
    nf = m.flag_count
    s0, s1, s2 = m.s0, m.s1, m.s2
    num = [-1] * nf
    order = [0] * nf
    num[start] = 0
    order[0] = start
    filled = 1
    head = 0
    while head < filled:
        fl = order[head]
        head += 1
        for img in (s0[fl], s1[fl], s2[fl]):
            if num[img] < 0:
                num[img] = filled
                order[filled] = img
                filled += 1
    return order, num


def _code_from(m: CombMap, order: list[int], num: list[int]) -> list[int]:
    s0, s1, s2 = m.s0, m.s1, m.s2
    code = []
    for fl in order:
        code.append(num[s0[fl]])
        code.append(num[s1[fl]])
        code.append(num[s2[fl]])
    return code


def _min_code_and_starts(m: CombMap) -> tuple[list[int], list[int]]:
    best: Optional[list[int]] = None
    starts: list[int] = []
    for start in range(m.flag_count):
        order, num = _traverse(m, start)
        code = _code_from(m, order, num)
        if best is None or code < best:
            best = code
            starts = [start]
        elif code == best:
            starts.append(start)
    return best, starts


def _encode(code: list[int]) -> bytes:
    if max(code, default=0) < 255:
        return bytes(code)
    out = bytearray()
    for x in code:
        out += x.to_bytes(2, "big")
    return bytes(out)


def canonical_code(m: CombMap) -> CanonicalCode:
    """Lexicographically least traversal code over all start flags."""
    best, _ = _min_code_and_starts(m)
    return CanonicalCode(_encode(best))


def isomorphic(m1: CombMap, m2: CombMap) -> Optional[dict[int, int]]:
    """A vertex bijection carrying m1 onto m2, or None.

    When the canonical codes agree, matching the two canonical traversals
    flag-by-flag induces the bijection; it maps faces to faces by
    construction.
    """
    if m1.flag_count != m2.flag_count:
        return None
    code1, starts1 = _min_code_and_starts(m1)
    code2, starts2 = _min_code_and_starts(m2)
    if code1 != code2:
        return None
    order1, _ = _traverse(m1, starts1[0])
    order2, _ = _traverse(m2, starts2[0])
    mapping: dict[int, int] = {}
    for k in range(m1.flag_count):
        a = m1.vertex_of[order1[k]] + 1
        b = m2.vertex_of[order2[k]] + 1
        if mapping.setdefault(a, b) != b:
            return None
    return mapping


@dataclass(frozen=True)
class PermGroup:
    """A finite permutation group given by its full element list on flags,
    with the projected vertex action."""

    degree: int
    generators: tuple[tuple[int, ...], ...]
    vertex_action: tuple[tuple[int, ...], ...]
    order: int
    structure: str

    def vertex_orbits(self) -> list[tuple[int, ...]]:
        n = len(self.vertex_action[0]) if self.vertex_action else 0
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.vertex_action:
            for i, j in enumerate(perm):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
        groups: dict[int, list[int]] = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i + 1)
        return [tuple(g) for g in sorted(groups.values())]


def _perm_order(p: tuple[int, ...]) -> int:
    n = len(p)
    seen = [False] * n
    from math import lcm

    out = 1
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            out = lcm(out, length)
    return out


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[x] for x in q)


def recognize_group(group) -> str:
    """Structure label for a small permutation group.

    Accepts a PermGroup or a full element list.  The catalog covers the
    groups met in the census: trivial, cyclic Z_n, dihedral D_n of order 2n
    (with the Klein four-group reported as "D_2 (Klein four)"), and
    elementary abelian groups, all up to order 16.  Anything else is labeled
    unrecognized(order).
    """
    if isinstance(group, PermGroup):
        elements = list(group.generators)
    else:
        elements = list(group)
    order = len(elements)
    if order == 1:
        return "trivial"
    if order > 16:
        return f"unrecognized({order})"
    orders = sorted(_perm_order(g) for g in elements)
    abelian = all(
        _compose(a, b) == _compose(b, a) for a in elements for b in elements
    )
    if order == 4 and abelian and orders == [1, 2, 2, 2]:
        return "D_2 (Klein four)"
    if max(orders) == order:
        return f"Z_{order}"
    for p in (2, 3):
        if all(o in (1, p) for o in orders) and abelian:
            import math

            k = round(math.log(order, p))
            return f"elementary-abelian (Z_{p}^{k})"
    if order % 2 == 0:
        half = order // 2
        cyc = [g for g in elements if _perm_order(g) == half]
        if cyc:
            g = cyc[0]
            powers = {g}
            cur = g
            for _ in range(half - 1):
                cur = _compose(cur, g)
                powers.add(cur)
            ident = tuple(range(len(g)))
            ginv = [0] * len(g)
            for i, j in enumerate(g):
                ginv[j] = i
            ginv = tuple(ginv)
            for h in elements:
                if h not in powers and _compose(h, h) == ident:
                    if _compose(_compose(h, g), h) == ginv:
                        return f"D_{half}"
    return f"unrecognized({order})"


def automorphism_group(m: CombMap) -> PermGroup:
    """The full automorphism group from the canonical-code scan.

    Every code-minimizing start flag gives exactly one automorphism (the flag
    permutation matching its traversal numbering to the reference one); the
    group order is the number of such flags.  The vertex projection is
    checked to be faithful; polyhedral maps never trip this.
    """
    _, starts = _min_code_and_starts(m)
    ref_order, _ = _traverse(m, starts[0])
    elements = []
    vertex_elements = []
    seen_vertex = set()
    for s in starts:
        order_s, _ = _traverse(m, s)
        perm = [0] * m.flag_count
        for k in range(m.flag_count):
            perm[ref_order[k]] = order_s[k]
        vperm = [0] * m.f0
        for fl in range(m.flag_count):
            vperm[m.vertex_of[fl]] = m.vertex_of[perm[fl]]
        elements.append(tuple(perm))
        vt = tuple(vperm)
        if vt in seen_vertex:
            raise ValueError(
                "vertex projection of the automorphism group is not faithful"
            )
        seen_vertex.add(vt)
        vertex_elements.append(vt)
    structure = recognize_group(elements)
    return PermGroup(
        degree=m.flag_count,
        generators=tuple(elements),
        vertex_action=tuple(vertex_elements),
        order=len(elements),
        structure=structure,
    )


def vertex_orbits(m: CombMap) -> list[tuple[int, ...]]:
    return automorphism_group(m).vertex_orbits()


def is_vertex_transitive(m: CombMap) -> bool:
    return len(vertex_orbits(m)) == 1


@dataclass(frozen=True)
class GiGraph:
    """Graph on the map's vertices joining u, v when their link-vertex sets
    share exactly i elements."""

    i: int
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def degree_multiset(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a - 1] += 1
            deg[b - 1] += 1
        return tuple(sorted(deg))

    def is_perfect_matching_on_support(self) -> bool:
        support = {v for e in self.edges for v in e}
        deg = {v: 0 for v in support}
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return bool(self.edges) and all(d == 1 for d in deg.values())


def gi_graph(m: CombMap, i: int) -> GiGraph:
    neighborhoods = [set(link_cycle(m, v).boundary) for v in range(1, m.f0 + 1)]
    edges = []
    for a in range(1, m.f0 + 1):
        na = neighborhoods[a - 1]
        for b in range(a + 1, m.f0 + 1):
            if len(na & neighborhoods[b - 1]) == i:
                edges.append((a, b))
    return GiGraph(i=i, vertex_count=m.f0, edges=tuple(edges))
