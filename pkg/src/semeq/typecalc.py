"""Vertex-type arithmetic for semi-equivelar maps.

A vertex type is a cyclic sequence of face sizes [p1^n1, ..., pk^nk]: walking
around any vertex of the map, the incident faces have these sizes in this
cyclic order (up to rotation and reflection).  Fixing the Euler characteristic
of the surface pins down the vertex count of any map realizing a given type,
because every count in sight is a linear function of the vertex count:

    f1 = n*d/2,   x_q = n*m_q/q,   f2 = sum x_q,   n - f1 + f2 = chi,

where d is the common vertex degree, m_q the multiplicity of size q in the
type, and x_q the number of q-gonal faces.  This module solves that system in
exact rational arithmetic and applies a battery of combinatorial filters that
rule most (n, type) candidates out before any search is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Optional

__all__ = [
    "VertexTypeSpec",
    "AdmissiblePair",
    "FilterOptions",
    "TypeSyntaxError",
    "SizeTooSmall",
    "DegreeTooSmall",
    "parse_type",
    "normalize_cycle",
    "datta_maity_admissible",
    "vertex_count_for",
    "face_counts",
    "closed_star_size",
    "admissible_types",
    "admissible_types_bruteforce",
]


class TypeSyntaxError(ValueError):
    """Raised when a type string does not match the bracket grammar."""


class SizeTooSmall(ValueError):
    """Raised when a face size below 3 appears in a type."""


class DegreeTooSmall(ValueError):
    """Raised when a type has fewer than 3 entries."""


def normalize_cycle(raw: Iterable[int]) -> tuple[int, ...]:
    """Canonical form of a cyclic size sequence.

    Returns the lexicographically least tuple over all rotations of the
    sequence and of its reversal, so two sequences describing the same
    cyclic-up-to-reflection object normalize identically.
    """
    cyc = tuple(raw)
    if len(cyc) < 3:
        raise DegreeTooSmall(f"vertex degree must be >= 3, got {len(cyc)}")
    if any(p < 3 for p in cyc):
        raise SizeTooSmall(f"face sizes must be >= 3, got {min(cyc)}")
    best = None
    for seq in (cyc, cyc[::-1]):
        for r in range(len(seq)):
            cand = seq[r:] + seq[:r]
            if best is None or cand < best:
                best = cand
    return best


def _run_lengths(cyc: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Cyclic run-length encoding [(p, n), ...] with p differing between
    consecutive runs (the first and last run are merged across the wrap)."""
    runs: list[list[int]] = []
    for p in cyc:
        if runs and runs[-1][0] == p:
            runs[-1][1] += 1
        else:
            runs.append([p, 1])
    if len(runs) > 1 and runs[0][0] == runs[-1][0]:
        runs[0][1] += runs.pop()[1]
    return tuple((p, n) for p, n in runs)


@dataclass(frozen=True)
class VertexTypeSpec:
    """A vertex type in canonical cyclic form.

    ``cycle`` is the lexicographically least linearization over all rotations
    and reflections.  ``runs`` is its run-length view and ``collapsed`` the
    multiset view {size: multiplicity}.
    """

    cycle: tuple[int, ...]

    def __post_init__(self):
        norm = normalize_cycle(self.cycle)
        if norm != self.cycle:
            object.__setattr__(self, "cycle", norm)

    @property
    def degree(self) -> int:
        return len(self.cycle)

    @property
    def runs(self) -> tuple[tuple[int, int], ...]:
        return _run_lengths(self.cycle)

    @property
    def collapsed(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.cycle:
            out[p] = out.get(p, 0) + 1
        return out

    def __str__(self) -> str:
        parts = []
        for p, n in self.runs:
            parts.append(f"{p}^{n}" if n > 1 else f"{p}^1")
        return "[" + ",".join(parts) + "]"

    def equivalent_to(self, other: "VertexTypeSpec") -> bool:
        return self.cycle == other.cycle


def parse_type(text: str) -> VertexTypeSpec:
    """Parse bracket notation like ``[3^2,4^1,3^1,5^1]`` or a bare size list.

    Exponent ``^1`` may be omitted; whitespace is ignored.  Raises
    TypeSyntaxError / SizeTooSmall / DegreeTooSmall on bad input.
    """
    s = "".join(text.split())
    if not s:
        raise TypeSyntaxError("empty type string")
    if s.startswith("["):
        if not s.endswith("]"):
            raise TypeSyntaxError(f"unbalanced brackets in {text!r}")
        s = s[1:-1]
    if not s:
        raise TypeSyntaxError(f"no entries in {text!r}")
    cycle: list[int] = []
    for item in s.split(","):
        if not item:
            raise TypeSyntaxError(f"empty item in {text!r}")
        if "^" in item:
            base, _, exp = item.partition("^")
        else:
            base, exp = item, "1"
        if not (base.isdigit() and exp.isdigit()):
            raise TypeSyntaxError(f"bad item {item!r} in {text!r}")
        p, n = int(base), int(exp)
        if n < 1:
            raise TypeSyntaxError(f"exponent must be >= 1 in {item!r}")
        if p < 3:
            raise SizeTooSmall(f"face size {p} < 3 in {text!r}")
        cycle.extend([p] * n)
    if len(cycle) < 3:
        raise DegreeTooSmall(f"degree {len(cycle)} < 3 in {text!r}")
    return VertexTypeSpec(tuple(cycle))


def datta_maity_admissible(t: VertexTypeSpec) -> tuple[bool, Optional[str]]:
    """Apply the three parity exclusion rules for vertex types.

    A type fails, and cannot be realized by any semi-equivelar map on any
    surface, when on its cyclic run structure (checked over all rotations,
    reflection included via the canonical form):

      i.   some run is p^2 with p odd and p in no other run;
      ii.  some run is p^1 with p odd, p unique, and distinct cyclic
           neighbor sizes;
      iii. the run structure is [p^1, q^m, p^1, r^n] with p, q, r distinct
           and p odd.

    Returns (True, None) when no rule fires, else (False, rule_name).
    """
    runs = t.runs
    k = len(runs)
    sizes = [p for p, _ in runs]
    for i, (p, n) in enumerate(runs):
        unique = all(q != p for j, (q, _) in enumerate(runs) if j != i)
        if n == 2 and p % 2 == 1 and unique:
            return False, "i"
        if (
            n == 1
            and p % 2 == 1
            and unique
            and k >= 2
            and sizes[(i - 1) % k] != sizes[(i + 1) % k]
        ):
            return False, "ii"
    if k == 4:
        for r in range(4):
            (p1, n1), (q, _), (p2, n2), (w, _) = (runs[(r + j) % 4] for j in range(4))
            if (
                p1 == p2
                and n1 == 1
                and n2 == 1
                and p1 % 2 == 1
                and len({p1, q, w}) == 3
            ):
                return False, "iii"
    return True, None


def _euler_coefficient(t: VertexTypeSpec) -> Fraction:
    return Fraction(1) - Fraction(t.degree, 2) + sum(Fraction(1, p) for p in t.cycle)


def vertex_count_for(t: VertexTypeSpec, chi: int) -> Optional[int]:
    """Solve n * (1 - d/2 + sum 1/p_j) = chi exactly.

    Returns the vertex count when it is a positive integer, else None.  A
    vanishing coefficient (flat types) pins no vertex count, so None.
    """
    coeff = _euler_coefficient(t)
    if coeff == 0:
        return None
    n = Fraction(chi) / coeff
    if n > 0 and n.denominator == 1:
        return int(n)
    return None


def face_counts(t: VertexTypeSpec, n: int) -> Optional[dict[int, int]]:
    """Per-size face counts x_q = n*m_q/q, or None if any is non-integral."""
    out: dict[int, int] = {}
    for q, m in sorted(t.collapsed.items()):
        x = Fraction(n * m, q)
        if x.denominator != 1:
            return None
        out[q] = int(x)
    return out


def closed_star_size(t: VertexTypeSpec) -> int:
    """Number of distinct vertices in the closed star of a vertex.

    The link of a vertex is a simple cycle with sum(p_j - 2) vertices; the
    center adds one more.
    """
    return 1 + sum(p - 2 for p in t.cycle)


@dataclass(frozen=True)
class FilterOptions:
    """Toggles for the admissibility filters.

    ``min_face_count`` is the lower bound demanded of every x_q (the census
    arithmetic uses 3; set to 1 to keep every integral solution).
    ``closed_star`` rejects types whose closed star exceeds the vertex count,
    allowing equality only in the complete-graph situation d = n - 1.
    ``p_max`` caps face sizes explored when the other filters are relaxed.
    """

    prop1: bool = True
    min_vertices: int = 7
    min_face_count: int = 3
    closed_star: bool = True
    p_max: int = 100


@dataclass(frozen=True)
class AdmissiblePair:
    """An (n, type) candidate surviving all enabled filters."""

    n: int
    type: VertexTypeSpec
    face_counts: dict[int, int] = field(hash=False)
    filters_passed: tuple[str, ...] = ()

    def euler_characteristic(self) -> int:
        val = self.n * _euler_coefficient(self.type)
        assert val.denominator == 1
        return int(val)


def _passes(t: VertexTypeSpec, chi: int, opts: FilterOptions) -> Optional[AdmissiblePair]:
    n = vertex_count_for(t, chi)
    if n is None or n < opts.min_vertices:
        return None
    xs = face_counts(t, n)
    if xs is None or any(x < opts.min_face_count for x in xs.values()):
        return None
    applied = ["euler", "integral-face-counts", f"min-vertices>={opts.min_vertices}"]
    if opts.prop1:
        ok, _rule = datta_maity_admissible(t)
        if not ok:
            return None
        applied.append("parity-rules")
    if opts.closed_star:
        star = closed_star_size(t)
        if star > n or (star == n and t.degree != n - 1):
            return None
        applied.append("closed-star")
    return AdmissiblePair(n=n, type=t, face_counts=xs, filters_passed=tuple(applied))


def _size_candidates(d: int, chi: int, opts: FilterOptions) -> Iterable[tuple[int, ...]]:
    """Nondecreasing size multisets whose reciprocal sum lies in the window
    forced by n >= min_vertices (depth-first with monotone pruning)."""
    lo = Fraction(d, 2) - 1 - Fraction(-chi, opts.min_vertices)
    hi = Fraction(d, 2) - 1
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], start: int, acc: Fraction) -> None:
        r = d - len(prefix)
        if r == 0:
            if lo <= acc < hi:
                out.append(tuple(prefix))
            return
        for p in range(start, opts.p_max + 1):
            if acc + Fraction(r, p) < lo:
                break
            rec(prefix + [p], p, acc + Fraction(1, p))

    rec([], 3, Fraction(0))
    return out


def _distinct_arrangements(ms: tuple[int, ...]) -> set[tuple[int, ...]]:
    return {normalize_cycle(p) for p in set(permutations(ms))}


def admissible_types(chi: int, opts: FilterOptions | None = None) -> list[AdmissiblePair]:
    """All admissible (n, type) pairs for a surface of Euler characteristic chi.

    Requires chi < 0: the degree bound d <= 6 comes from (d-6)*n <= -6*chi
    together with n >= 7, which fails for chi >= 0.  Results are sorted by
    (degree, n, cycle) and deduplicated by canonical cycle.
    """
    if chi >= 0:
        raise ValueError("admissible_types requires chi < 0 (degree bound d <= 6)")
    opts = opts or FilterOptions()
    found: dict[tuple[int, ...], AdmissiblePair] = {}
    for d in range(3, 7):
        for ms in _size_candidates(d, chi, opts):
            for cyc in _distinct_arrangements(ms):
                if cyc in found:
                    continue
                pair = _passes(VertexTypeSpec(cyc), chi, opts)
                if pair is not None:
                    found[cyc] = pair
    return sorted(found.values(), key=lambda a: (a.type.degree, a.n, a.type.cycle))


def admissible_types_bruteforce(
    chi: int, opts: FilterOptions | None = None, p_max: int = 100
) -> list[AdmissiblePair]:
    """Independent oracle for admissible_types: exhaust every cyclic sequence
    of degree 3..6 with entries up to p_max through the same predicates,
    without the window pruning of the structured search."""
    if chi >= 0:
        raise ValueError("requires chi < 0")
    opts = opts or FilterOptions()
    found: dict[tuple[int, ...], AdmissiblePair] = {}
    for d in range(3, 7):
        # plain exhaustive loop over nondecreasing tuples, feasibility cut only
        stack: list[tuple[list[int], int, Fraction]] = [([], 3, Fraction(0))]
        while stack:
            prefix, start, acc = stack.pop()
            r = d - len(prefix)
            if r == 0:
                if acc < Fraction(d, 2) - 1:
                    for cyc in _distinct_arrangements(tuple(prefix)):
                        if cyc not in found:
                            pair = _passes(VertexTypeSpec(cyc), chi, opts)
                            if pair is not None:
                                found[cyc] = pair
                continue
            for p in range(start, p_max + 1):
                nacc = acc + Fraction(1, p)
                # all remaining entries are >= p, so the final sum is at most
                # acc + r/p; once that dips below the window floor stop growing p
                if acc + Fraction(r, p) < Fraction(d, 2) - 1 - Fraction(-chi, opts.min_vertices):
                    break
                stack.append((prefix + [p], p, nacc))
    return sorted(found.values(), key=lambda a: (a.type.degree, a.n, a.type.cycle))
