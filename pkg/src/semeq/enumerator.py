"""Exhaustive isomorph-free generation of semi-equivelar maps.

The generator mechanizes link completion: fix the closed star of vertex 1 in
canonical position (its fan is the type cycle, boundary labeled 2, 3, ... in
rotation order), then repeatedly work on the open vertex whose fan is
fullest.  At most one face is ever incomplete: a face begun at a fan corner
is extended vertex by vertex until it closes, so the face occupying any
chosen corner is either already present or genuinely new.  Branches reuse
existing labels in ascending order and may introduce at most the single next
fresh label, which together with the fixed root star eliminates label
symmetry; leftover isomorphic duplicates are removed afterwards by canonical
code.

State is mutated in place with an undo journal, so a search node costs a few
dictionary operations plus an O(d^2) re-validation of the one vertex fan
that changed.  Every prune is a necessary condition (edge used by at most
two faces, the polyhedral face-intersection rules, partial fans embedding
into the type cycle, face and label budgets), hence the search is
exhaustive: it visits a superset of every map of the requested type, and
each surviving completion is checked again by the full polyhedrality
validator before being emitted.
"""

from __future__ import annotations

import json
import os
import struct
import time
from dataclasses import dataclass, field
from typing import Optional

from .mapcore import CombMap, FaceListMap, build_from_faces, semi_equivelar_type, validate_polyhedral
from .symmetry import canonical_code
from .typecalc import VertexTypeSpec, closed_star_size, face_counts

__all__ = [
    "EnumOptions",
    "EnumerationResult",
    "InconsistentParametersError",
    "CorruptCheckpointError",
    "enumerate_maps",
    "exists_any",
]

_CKPT_MAGIC = b"SEMQCKPT"
_CKPT_VERSION = 1


class InconsistentParametersError(ValueError):
    """(type, n, chi) fail the exact Euler arithmetic."""


class CorruptCheckpointError(ValueError):
    """Checkpoint blob has a bad magic, version, or parameter signature."""


@dataclass(frozen=True)
class EnumOptions:
    """Search controls.

    threads > 1 splits the tree into independent subtrees handled by worker
    processes; the result set never depends on the split.  node_budget bounds
    expanded nodes (complete=False when hit); in subtree mode (threads > 1 or
    a checkpoint path) it is divided evenly into per-subtree quotas so that
    budget truncation stays scheduling-independent.  branch_shuffle_seed randomizes
    candidate order inside each node (testing aid; incompatible with
    checkpoints).  disable_pair_prune turns off the incremental polyhedral-
    intersection cuts, leaving the final validator to reject those
    completions (testing aid).  fresh_first tries the new-label branch before
    label reuse: irrelevant for exhaustive counts, but existence searches on
    large types typically find a witness orders of magnitude sooner with it.
    """

    threads: int = 1
    node_budget: Optional[int] = None
    checkpoint_path: Optional[str] = None
    checkpoint_every: int = 16
    split_target: int = 64
    branch_shuffle_seed: Optional[int] = None
    disable_pair_prune: bool = False
    fresh_first: bool = False


@dataclass
class EnumerationStats:
    nodes: int = 0
    prunes: dict = field(default_factory=dict)
    completions: int = 0
    rejected_nonpolyhedral: int = 0
    rejected_wrong_type: int = 0
    rejected_wrong_size: int = 0
    wall_seconds: float = 0.0

    def bump(self, reason: str) -> None:
        self.prunes[reason] = self.prunes.get(reason, 0) + 1

    def merge(self, other: "EnumerationStats") -> None:
        self.nodes += other.nodes
        self.completions += other.completions
        self.rejected_nonpolyhedral += other.rejected_nonpolyhedral
        self.rejected_wrong_type += other.rejected_wrong_type
        self.rejected_wrong_size += other.rejected_wrong_size
        for k, v in other.prunes.items():
            self.prunes[k] = self.prunes.get(k, 0) + v

    def to_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "completions": self.completions,
            "rejected_nonpolyhedral": self.rejected_nonpolyhedral,
            "rejected_wrong_type": self.rejected_wrong_type,
            "rejected_wrong_size": self.rejected_wrong_size,
            "prunes": dict(sorted(self.prunes.items())),
        }


@dataclass(frozen=True)
class EnumerationResult:
    maps: tuple[CombMap, ...]
    codes: tuple[bytes, ...]
    stats: EnumerationStats
    complete: bool
    diagnostic: Optional[str] = None


class _StopSearch(Exception):
    """Raised to unwind the DFS once exists_any found a map."""


class _Search:
    """Mutable search state with an undo journal."""

    def __init__(self, cycle: tuple[int, ...], n: int, budgets: dict[int, int],
                 pair_prune: bool = True, fresh_first: bool = False):
        self.cycle = cycle
        self.d = len(cycle)
        self.n = n
        chars = {s: chr(s) for s in set(cycle)}
        tstr = "".join(chars[s] for s in cycle)
        self.size_char = chars
        self.t2 = tstr + tstr
        rstr = tstr[::-1]
        self.r2 = rstr + rstr
        self.pair_prune = pair_prune
        self.fresh_first = fresh_first

        self.fsize: list[int] = []
        self.fpath: list[list[int]] = []
        self.fvset: list[set[int]] = []
        self.fclosed: list[bool] = []
        self.edge_faces: dict[tuple[int, int], list[int]] = {}
        self.pair_edges: dict[tuple[int, int], int] = {}
        self.pair_verts: dict[tuple[int, int], list[int]] = {}
        self.vfaces: list[list[int]] = [[] for _ in range(n + 1)]
        self.budget = dict(budgets)
        self.sizes_sorted = sorted(budgets)
        self.type_mult: dict[int, int] = {}
        for s in cycle:
            self.type_mult[s] = self.type_mult.get(s, 0) + 1
        self.corners: list[dict[int, tuple[int, int]]] = [dict() for _ in range(n + 1)]
        self.corner_count = [0] * (n + 1)
        self.fan_closed = bytearray(n + 1)
        self.labels_used = 0
        self.journal: list[tuple] = []

    # -- journal ----------------------------------------------------------

    def mark(self) -> int:
        return len(self.journal)

    def undo_to(self, mark: int) -> None:
        j = self.journal
        while len(j) > mark:
            op = j.pop()
            tag = op[0]
            if tag == 0:  # append
                fid = op[1]
                y = self.fpath[fid].pop()
                self.fvset[fid].discard(y)
            elif tag == 1:  # edge
                key = op[1]
                lst = self.edge_faces[key]
                lst.pop()
                if not lst:
                    del self.edge_faces[key]
            elif tag == 2:  # corner
                v, fid = op[1], op[2]
                del self.corners[v][fid]
                self.corner_count[v] -= 1
            elif tag == 3:  # fan closed
                self.fan_closed[op[1]] = 0
            elif tag == 4:  # face created
                fid = op[1]
                self.budget[self.fsize[fid]] += 1
                self.fsize.pop()
                self.fpath.pop()
                self.fvset.pop()
                self.fclosed.pop()
            elif tag == 5:  # face closed
                self.fclosed[op[1]] = False
            elif tag == 6:  # label
                self.labels_used -= 1
            elif tag == 7:  # path reversed
                self.fpath[op[1]].reverse()
            elif tag == 8:  # face-pair shared-edge counter
                pkey = op[1]
                cnt = self.pair_edges[pkey] - 1
                if cnt:
                    self.pair_edges[pkey] = cnt
                else:
                    del self.pair_edges[pkey]
            elif tag == 9:  # face-pair shared-vertex list
                pkey = op[1]
                lst = self.pair_verts[pkey]
                lst.pop()
                if not lst:
                    del self.pair_verts[pkey]
            elif tag == 10:  # vertex-face incidence
                self.vfaces[op[1]].pop()

    # -- mutators (log first, then check; caller unwinds on False) --------

    def _add_edge(self, a: int, b: int, fid: int) -> bool:
        key = (a, b) if a < b else (b, a)
        lst = self.edge_faces.get(key)
        if lst is None:
            self.edge_faces[key] = [fid]
            self.journal.append((1, key))
            return True
        if len(lst) >= 2:
            return False
        lst.append(fid)
        self.journal.append((1, key))
        g = lst[0]
        # the two faces along an edge sit next to each other in both endpoint
        # fans, so their sizes must be adjacent somewhere in the type cycle
        w = self.size_char[self.fsize[g]] + self.size_char[self.fsize[fid]]
        if w not in self.t2 and w not in self.r2:
            return False
        if self.pair_prune:
            pkey = (g, fid) if g < fid else (fid, g)
            cnt = self.pair_edges.get(pkey, 0) + 1
            self.pair_edges[pkey] = cnt
            self.journal.append((8, pkey))
            if cnt > 1:
                return False
        return True

    def _add_corner(self, v: int, fid: int, a: int, b: int) -> bool:
        if self.corner_count[v] >= self.d:
            return False
        self.corners[v][fid] = (a, b)
        self.corner_count[v] += 1
        self.journal.append((2, v, fid))
        return self._validate_vertex(v)

    def _pair_feasible(self, f: int, g: int, u: int, w: int) -> bool:
        """Two faces sharing the vertices u and w must share exactly the edge
        {u, w}: each face must already carry that edge or still be able to
        close on it, and no third face may sit on it."""
        key = (u, w) if u < w else (w, u)
        efs = self.edge_faces.get(key, ())
        for h in efs:
            if h != f and h != g:
                return False
        for p in (f, g):
            if p in efs:
                continue
            if self.fclosed[p]:
                return False
            path = self.fpath[p]
            if (path[0] == u and path[-1] == w) or (path[0] == w and path[-1] == u):
                continue
            return False
        return True

    def _add_shared(self, fid: int, y: int) -> bool:
        """Record that face fid now contains y and check every face pair
        meeting at y against the polyhedral intersection conditions."""
        if not self.pair_prune:
            return True
        vf = self.vfaces[y]
        ok = True
        for g in vf:
            pkey = (g, fid) if g < fid else (fid, g)
            lst = self.pair_verts.get(pkey)
            if lst is None:
                self.pair_verts[pkey] = [y]
                self.journal.append((9, pkey))
                continue
            lst.append(y)
            self.journal.append((9, pkey))
            if len(lst) > 2:
                ok = False
                break
            if not self._pair_feasible(fid, g, lst[0], lst[1]):
                ok = False
                break
        vf.append(fid)
        self.journal.append((10, y))
        return ok

    def _recheck_pairs(self, fid: int) -> bool:
        """After fid closes, pairs that were deferred while it could still
        close on the shared edge must be re-validated."""
        if not self.pair_prune:
            return True
        pv = self.pair_verts
        for y in self.fpath[fid]:
            for g in self.vfaces[y]:
                if g == fid:
                    continue
                pkey = (g, fid) if g < fid else (fid, g)
                lst = pv.get(pkey)
                if lst is not None and len(lst) == 2 and lst[-1] == y:
                    if not self._pair_feasible(fid, g, lst[0], lst[1]):
                        return False
        return True

    def _corner_partner(self, v: int, fid: int, u: int):
        """The other corner face of v attached across edge {v, u}, or -1."""
        key = (v, u) if v < u else (u, v)
        lst = self.edge_faces[key]
        if len(lst) == 2:
            other = lst[1] if lst[0] == fid else lst[0]
            if other in self.corners[v]:
                return other
        return -1

    def _validate_vertex(self, v: int) -> bool:
        """Re-check the fan of v: arcs must chain, embed into the type cycle,
        and close exactly when the degree is reached.

        Corner faces at v are adjacent when they share one of v's edges; the
        edge table caps an edge at two faces, so the corner graph is a union
        of paths and cycles.  A cycle is only legal as the full fan.
        """
        count = self.corner_count[v]
        if count == 1:
            return True
        cdict = self.corners[v]
        sc = self.size_char
        fs = self.fsize
        if count == 2:
            (f1, (a1, b1)), (f2, (a2, b2)) = cdict.items()
            shared = (a1 == a2) + (a1 == b2) + (b1 == a2) + (b1 == b2)
            if shared == 0:
                # two disjoint arcs need two more connecting corners
                return self.d >= 4
            if shared >= 2:
                return False
            w = sc[fs[f1]] + sc[fs[f2]]
            return w in self.t2 or w in self.r2
        partner = self._corner_partner
        visited = set()
        cycle = False
        words: list[str] = []
        for fid, (a, b) in cdict.items():
            if fid in visited:
                continue
            if partner(v, fid, a) == -1:
                start_nbr = a
            elif partner(v, fid, b) == -1:
                start_nbr = b
            else:
                continue  # interior corner or cycle member
            comp = [fid]
            visited.add(fid)
            prev_nbr, cur = start_nbr, fid
            while True:
                aa, bb = cdict[cur]
                out = bb if prev_nbr == aa else aa
                nxt = partner(v, cur, out)
                if nxt == -1:
                    break
                comp.append(nxt)
                visited.add(nxt)
                prev_nbr, cur = out, nxt
            words.append("".join(sc[fs[f]] for f in comp))
        if len(visited) != count:
            # remaining corners close a cycle; legal only as the whole fan
            if visited or count != self.d:
                return False
            fid = next(iter(cdict))
            comp = [fid]
            prev_nbr, cur = cdict[fid][0], fid
            while True:
                a2, b2 = cdict[cur]
                out = b2 if prev_nbr == a2 else a2
                nxt = partner(v, cur, out)
                if nxt == fid:
                    break
                comp.append(nxt)
                prev_nbr, cur = out, nxt
            if len(comp) != count:
                return False
            word = "".join(sc[fs[f]] for f in comp)
            if word not in self.t2 and word not in self.r2:
                return False
            self.fan_closed[v] = 1
            self.journal.append((3, v))
            return True
        if count == self.d:
            return False
        # joining k arcs into the fan cycle takes at least k more corners
        if self.d - count < len(words):
            return False
        for word in words:
            if word not in self.t2 and word not in self.r2:
                return False
        if count == self.d - 1:
            # a single face must close the fan; its size must complete a
            # rotation of the type cycle
            word = words[0]
            for s in self.sizes_sorted:
                w = word + sc[s]
                if w in self.t2 or w in self.r2:
                    return True
            return False
        return True

    def _half_corner_ok(self, y: int, v: int, newfid: int) -> bool:
        """The new face was just laid along edge {v, y} but has no corner at
        y yet.  If the other face on that edge already has a corner at y, the
        new face is forced to sit next to it in y's fan, so the arc word
        extended by the new face's size must still embed."""
        key = (v, y) if v < y else (y, v)
        lst = self.edge_faces[key]
        if len(lst) != 2:
            return True
        g = lst[1] if lst[0] == newfid else lst[0]
        cdict = self.corners[y]
        if g not in cdict:
            return True
        comp = [g]
        prev_nbr, cur = v, g
        while True:
            aa, bb = cdict[cur]
            out = bb if prev_nbr == aa else aa
            nxt = self._corner_partner(y, cur, out)
            if nxt == -1 or nxt == g:
                break
            comp.append(nxt)
            prev_nbr, cur = out, nxt
        sc = self.size_char
        fs = self.fsize
        word = "".join(sc[fs[f]] for f in reversed(comp)) + sc[fs[newfid]]
        return word in self.t2 or word in self.r2

    def _start_face(self, size: int, x: int, v: int) -> bool:
        fid = len(self.fsize)
        self.budget[size] -= 1
        self.fsize.append(size)
        self.fpath.append([x, v])
        self.fvset.append({x, v})
        self.fclosed.append(False)
        self.journal.append((4, fid))
        if not self._add_edge(x, v, fid):
            return False
        if not (self._add_shared(fid, x) and self._add_shared(fid, v)):
            return False
        return self._half_corner_ok(x, v, fid) and self._half_corner_ok(v, x, fid)

    def _close_face(self, fid: int) -> bool:
        path = self.fpath[fid]
        self.fclosed[fid] = True
        self.journal.append((5, fid))
        first, second, seclast, last = path[0], path[1], path[-2], path[-1]
        if not self._add_edge(last, first, fid):
            return False
        if not self._add_corner(last, fid, seclast, first):
            return False
        if not self._add_corner(first, fid, last, second):
            return False
        if not self._recheck_pairs(fid):
            return False
        size = self.fsize[fid]
        if self.budget[size] == 0 and not self._size_supply_ok(size):
            return False
        return True

    def _size_supply_ok(self, s: int) -> bool:
        """No s-faces remain (budget spent, none open): every vertex must
        already own its full quota of s-corners, and no vertex can still be
        missing."""
        if self.labels_used < self.n:
            return False
        need = self.type_mult[s]
        fs = self.fsize
        for v in range(1, self.labels_used + 1):
            if self.fan_closed[v]:
                continue
            cnt = 0
            for fid in self.corners[v]:
                if fs[fid] == s:
                    cnt += 1
            if cnt < need:
                return False
        return True

    def _append_vertex(self, fid: int, y: int, fresh: bool) -> bool:
        if fresh:
            self.labels_used += 1
            self.journal.append((6,))
        path = self.fpath[fid]
        x, v = path[-2], path[-1]
        path.append(y)
        self.fvset[fid].add(y)
        self.journal.append((0, fid))
        if not self._add_edge(v, y, fid):
            return False
        if not self._add_shared(fid, y):
            return False
        if not self._add_corner(v, fid, x, y):
            return False
        if len(path) == self.fsize[fid]:
            return self._close_face(fid)
        return self._half_corner_ok(y, v, fid)

    # -- seeding -----------------------------------------------------------

    def seed(self) -> bool:
        """Fix the closed star of vertex 1: fan = the type cycle in order,
        boundary labels 2.. in rotation order."""
        star = 1 + sum(c - 2 for c in self.cycle)
        if star > self.n:
            return False
        ring = list(range(2, star + 1))
        m = len(ring)
        self.labels_used = star
        off = 0
        for size in self.cycle:
            if self.budget[size] <= 0:
                return False
            first = ring[off % m]
            if not self._start_face(size, 1, first):
                return False
            fid = len(self.fsize) - 1
            for j in range(1, size - 1):
                y = ring[(off + j) % m]
                if not self._append_vertex(fid, y, fresh=False):
                    return False
            off += size - 2
        return bool(self.fan_closed[1])

    # -- deterministic slot and branching ----------------------------------
    #
    # Invariant: at most one face is incomplete at any time.  A face is begun
    # only when every existing face is closed, and it is then extended until
    # it closes.  Hence when a fan corner of the active vertex is chosen, the
    # face occupying it in any completion either already exists complete
    # (then the corner's edge carries two faces and is no free end) or has
    # not been started at all, so "start a new face" covers every extension.

    def find_slot(self):
        nf = len(self.fsize)
        if nf and not self.fclosed[nf - 1]:
            fid = nf - 1
            tail = self.extend_candidates(fid, head=False)
            head = self.extend_candidates(fid, head=True)
            if len(head) < len(tail):
                self.fpath[fid].reverse()
                self.journal.append((7, fid))
                return ("extend", fid, head)
            return ("extend", fid, tail)
        # activate the open vertex with the fullest fan (ties to the lowest
        # label): nearly-closed fans propagate contradictions soonest
        fan_closed = self.fan_closed
        cc = self.corner_count
        v = 0
        best = -1
        for u in range(1, self.labels_used + 1):
            if not fan_closed[u] and cc[u] > best:
                v = u
                best = cc[u]
        if not v:
            return ("complete",)
        cdict = self.corners[v]
        nbr_map: dict[int, list[int]] = {}
        for fid, (a, b) in cdict.items():
            for u in (a, b):
                nbr_map.setdefault(u, []).append(fid)
        best_nbr = None
        best_fid = None
        for fid, (a, b) in cdict.items():
            for u in (a, b):
                if len(nbr_map[u]) == 1 and (best_nbr is None or u < best_nbr):
                    best_nbr = u
                    best_fid = fid
        # orient the arc containing best_fid so the chosen end comes last
        comp = [best_fid]
        prev_nbr, cur = best_nbr, best_fid
        while True:
            aa, bb = cdict[cur]
            out = bb if prev_nbr == aa else aa
            partners = nbr_map[out]
            if len(partners) < 2:
                break
            nxt = partners[0] if partners[1] == cur else partners[1]
            comp.append(nxt)
            prev_nbr, cur = out, nxt
        word = "".join(self.size_char[self.fsize[f]] for f in reversed(comp))
        sizes = []
        for s in self.sizes_sorted:
            if self.budget[s] > 0:
                w = word + self.size_char[s]
                if w in self.t2 or w in self.r2:
                    sizes.append(s)
        return ("start", v, best_nbr, sizes)

    def extend_candidates(self, fid: int, head: bool = False) -> list[tuple[int, bool]]:
        path = self.fpath[fid]
        if head:
            v, first = path[0], path[-1]
        else:
            v, first = path[-1], path[0]
        vset = self.fvset[fid]
        will_close = len(path) + 1 == self.fsize[fid]
        edge_faces = self.edge_faces
        corner_count = self.corner_count
        d = self.d
        out = []
        for y in range(2, self.labels_used + 1):
            if y in vset:
                continue
            if corner_count[y] >= d:
                continue
            key = (v, y) if v < y else (y, v)
            lst = edge_faces.get(key)
            if lst is not None and len(lst) >= 2:
                continue
            if will_close:
                ckey = (y, first) if y < first else (first, y)
                clst = edge_faces.get(ckey)
                if clst is not None and len(clst) >= 2:
                    continue
                if corner_count[first] >= d:
                    continue
            out.append((y, False))
        if self.labels_used < self.n:
            y = self.labels_used + 1
            if not (will_close and corner_count[first] >= d):
                if self.fresh_first:
                    out.insert(0, (y, True))
                else:
                    out.append((y, True))
        return out

    def snapshot_faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(p) for p in self.fpath)


# -- DFS driver -------------------------------------------------------------


def _on_complete(st: _Search, stats: EnumerationStats, collector: dict,
                 first_only: bool) -> None:
    stats.completions += 1
    if (
        st.labels_used != st.n
        or any(st.budget.values())
        or not all(st.fclosed)
    ):
        stats.rejected_wrong_size += 1
        return
    faces = st.snapshot_faces()
    m = build_from_faces(FaceListMap(st.n, faces))
    if not validate_polyhedral(m).ok:
        stats.rejected_nonpolyhedral += 1
        return
    t = semi_equivelar_type(m)
    if t is None or t.cycle != st.cycle:
        stats.rejected_wrong_type += 1
        return
    code = canonical_code(m).data
    collector[code] = faces
    if first_only:
        raise _StopSearch


def _run(st: _Search, stats: EnumerationStats, collector: dict,
         prefix: tuple[int, ...] = (), node_quota: Optional[int] = None,
         rng=None, split_depth: Optional[int] = None,
         frontier: Optional[list] = None, first_only: bool = False) -> bool:
    """Depth-first search from the current state.

    ``prefix`` replays recorded candidate indices for the first levels (the
    subtree addressing used by parallel workers and checkpoints).  When
    ``split_depth`` is set, subtrees rooted at that depth are appended to
    ``frontier`` instead of being explored.  Returns False when the node
    quota was exhausted before the subtree was finished.
    """
    state = {"nodes": 0, "exhausted": False}

    def rec(depth: int, path: tuple[int, ...]) -> None:
        if state["exhausted"]:
            return
        slot = st.find_slot()
        kind = slot[0]
        if kind == "complete":
            _on_complete(st, stats, collector, first_only)
            return
        if split_depth is not None and depth >= split_depth:
            frontier.append(path)
            return
        if kind == "start":
            cands = slot[3]
        else:
            cands = slot[2]
        if depth < len(prefix):
            idx = prefix[depth]
            if idx >= len(cands):
                raise CorruptCheckpointError(
                    "recorded branch index does not exist at replay"
                )
            chosen = ((idx, cands[idx]),)
            count_nodes = False
        else:
            if rng is not None:
                cands = list(cands)
                rng.shuffle(cands)
            chosen = tuple(enumerate(cands))
            count_nodes = True
        track = split_depth is not None
        for idx, cand in chosen:
            if state["exhausted"]:
                break
            m = st.mark()
            if kind == "start":
                ok = st._start_face(cand, slot[2], slot[1])
            else:
                ok = st._append_vertex(slot[1], cand[0], cand[1])
            if ok:
                if count_nodes:
                    state["nodes"] += 1
                    stats.nodes += 1
                    if node_quota is not None and state["nodes"] > node_quota:
                        state["exhausted"] = True
                        stats.bump("budget")
                if not state["exhausted"]:
                    rec(depth + 1, path + (idx,) if track else path)
            else:
                stats.bump("constraint")
            st.undo_to(m)

    mark0 = st.mark()
    try:
        rec(0, ())
    finally:
        st.undo_to(mark0)
    return not state["exhausted"]


def _fresh_search(cycle: tuple[int, ...], n: int, budgets: dict[int, int],
                  pair_prune: bool, fresh_first: bool = False) -> Optional[_Search]:
    st = _Search(cycle, n, budgets, pair_prune, fresh_first)
    if not st.seed():
        return None
    return st


def _expand_frontier(cycle, n, budgets, pair_prune, target, collector, stats):
    """Iteratively deepen until at least ``target`` subtree roots exist (or
    the whole tree fits above the split depth).  Completions found above the
    split land directly in the collector."""
    depth = 4
    while True:
        frontier: list[tuple[int, ...]] = []
        tmp = EnumerationStats()
        st = _fresh_search(cycle, n, budgets, pair_prune)
        _run(st, tmp, collector, split_depth=depth, frontier=frontier)
        if len(frontier) >= target or not frontier:
            stats.merge(tmp)
            return frontier
        depth += 3


def _worker_task(args):
    cycle, n, budgets, pair_prune, paths, quota = args
    stats = EnumerationStats()
    collector: dict = {}
    exhausted = []
    for path in paths:
        st = _fresh_search(cycle, n, budgets, pair_prune)
        ok = _run(st, stats, collector, prefix=tuple(path), node_quota=quota)
        if not ok:
            exhausted.append(path)
    return collector, stats, exhausted


# -- checkpoints ------------------------------------------------------------


def _checkpoint_bytes(header: dict, pending: list, collector: dict,
                      stats: EnumerationStats) -> bytes:
    out = bytearray()
    out += _CKPT_MAGIC
    out += struct.pack(">H", _CKPT_VERSION)
    hdr = json.dumps(header, sort_keys=True).encode()
    out += struct.pack(">I", len(hdr)) + hdr
    out += struct.pack(">I", len(pending))
    for path in pending:
        out += struct.pack(">H", len(path))
        for idx in path:
            out += struct.pack(">H", idx)
    out += struct.pack(">I", len(collector))
    for code in sorted(collector):
        faces = json.dumps([list(f) for f in collector[code]]).encode()
        out += struct.pack(">I", len(code)) + code
        out += struct.pack(">I", len(faces)) + faces
    st = json.dumps(stats.to_dict(), sort_keys=True).encode()
    out += struct.pack(">I", len(st)) + st
    return bytes(out)


def _checkpoint_parse(blob: bytes) -> tuple[dict, list, dict, EnumerationStats]:
    if len(blob) < 14 or blob[:8] != _CKPT_MAGIC:
        raise CorruptCheckpointError("bad magic bytes")
    (version,) = struct.unpack(">H", blob[8:10])
    if version != _CKPT_VERSION:
        raise CorruptCheckpointError(f"unsupported checkpoint version {version}")
    pos = 10

    def take(fmt):
        nonlocal pos
        size = struct.calcsize(fmt)
        if pos + size > len(blob):
            raise CorruptCheckpointError("truncated checkpoint")
        vals = struct.unpack(fmt, blob[pos:pos + size])
        pos += size
        return vals[0] if len(vals) == 1 else vals

    def take_bytes(ln):
        nonlocal pos
        if pos + ln > len(blob):
            raise CorruptCheckpointError("truncated checkpoint")
        out = blob[pos:pos + ln]
        pos += ln
        return out

    try:
        header = json.loads(take_bytes(take(">I")))
        pending = []
        for _ in range(take(">I")):
            ln = take(">H")
            pending.append(tuple(take(">H") for _ in range(ln)))
        collector = {}
        for _ in range(take(">I")):
            code = bytes(take_bytes(take(">I")))
            faces = json.loads(take_bytes(take(">I")))
            collector[code] = tuple(tuple(v) for v in faces)
        stats_d = json.loads(take_bytes(take(">I")))
    except (json.JSONDecodeError, struct.error) as exc:
        raise CorruptCheckpointError(f"undecodable checkpoint: {exc}") from exc
    stats = EnumerationStats(
        nodes=stats_d.get("nodes", 0),
        prunes=stats_d.get("prunes", {}),
        completions=stats_d.get("completions", 0),
        rejected_nonpolyhedral=stats_d.get("rejected_nonpolyhedral", 0),
        rejected_wrong_type=stats_d.get("rejected_wrong_type", 0),
        rejected_wrong_size=stats_d.get("rejected_wrong_size", 0),
    )
    return header, pending, collector, stats


def _save_checkpoint(path: str, header: dict, pending: list, collector: dict,
                     stats: EnumerationStats) -> None:
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(_checkpoint_bytes(header, pending, collector, stats))
    os.replace(tmp, path)


# -- public API -------------------------------------------------------------


def _normalize_type(t) -> VertexTypeSpec:
    if isinstance(t, VertexTypeSpec):
        return t
    if isinstance(t, str):
        from .typecalc import parse_type

        return parse_type(t)
    return VertexTypeSpec(tuple(t))


def _consistency_diagnostic(spec: VertexTypeSpec, n: int, chi: int) -> Optional[str]:
    from fractions import Fraction

    d = spec.degree
    if (n * d) % 2:
        return f"n*d = {n}*{d} is odd, so the edge count n*d/2 is not an integer"
    xs = face_counts(spec, n)
    if xs is None:
        return f"face counts n*m_q/q are not all integers for n={n}"
    implied = n - n * d // 2 + sum(xs.values())
    if implied != chi:
        return (
            f"type {spec} with n={n} forces Euler characteristic {implied}, not {chi}"
        )
    return None


def enumerate_maps(t, n: int, chi: int, opts: EnumOptions | None = None) -> EnumerationResult:
    """All polyhedral semi-equivelar maps of the given type with n vertices,
    one representative per isomorphism class, sorted by canonical code.

    The parameters must satisfy the exact Euler arithmetic; otherwise the
    result is empty, complete, and carries a diagnostic (no such map can
    exist).  complete=False only when a node budget was exhausted.
    """
    opts = opts or EnumOptions()
    spec = _normalize_type(t)
    if n < 1:
        raise InconsistentParametersError(f"vertex count must be positive, got {n}")
    t_start = time.time()
    stats = EnumerationStats()

    def finish(collector: dict, complete: bool, diagnostic=None) -> EnumerationResult:
        stats.wall_seconds = time.time() - t_start
        codes = tuple(sorted(collector))
        maps = tuple(build_from_faces(FaceListMap(n, collector[c])) for c in codes)
        return EnumerationResult(maps=maps, codes=codes, stats=stats,
                                 complete=complete, diagnostic=diagnostic)

    diag = _consistency_diagnostic(spec, n, chi)
    if diag is not None:
        return finish({}, True, diag)
    if closed_star_size(spec) > n:
        return finish({}, True,
                      f"closed star needs {closed_star_size(spec)} distinct "
                      f"vertices but n={n}")
    budgets = face_counts(spec, n)
    if opts.branch_shuffle_seed is not None and (
        opts.threads > 1 or opts.checkpoint_path
    ):
        raise ValueError("branch shuffling is incompatible with subtree replay")

    collector: dict = {}
    subtree_mode = opts.threads > 1 or opts.checkpoint_path is not None
    if not subtree_mode:
        st = _fresh_search(spec.cycle, n, budgets, not opts.disable_pair_prune)
        if st is None:
            return finish({}, True, "root star cannot be assembled")
        rng = None
        if opts.branch_shuffle_seed is not None:
            import random

            rng = random.Random(opts.branch_shuffle_seed)
        ok = _run(st, stats, collector, node_quota=opts.node_budget, rng=rng)
        return finish(collector, ok)

    # subtree mode: shared by parallel runs and checkpointed runs
    header = {
        "cycle": list(spec.cycle),
        "n": n,
        "chi": chi,
        "pair_prune": not opts.disable_pair_prune,
    }
    pending: list[tuple[int, ...]] = []
    resumed = False
    if opts.checkpoint_path and os.path.exists(opts.checkpoint_path):
        with open(opts.checkpoint_path, "rb") as fh:
            saved_header, pending, collector, saved_stats = _checkpoint_parse(fh.read())
        if saved_header != header:
            raise CorruptCheckpointError(
                "checkpoint was written for different parameters"
            )
        stats.merge(saved_stats)
        resumed = True
    if not resumed:
        st = _fresh_search(spec.cycle, n, budgets, not opts.disable_pair_prune)
        if st is None:
            return finish({}, True, "root star cannot be assembled")
        pending = _expand_frontier(spec.cycle, n, budgets,
                                   not opts.disable_pair_prune,
                                   opts.split_target, collector, stats)
    quota = None
    if opts.node_budget is not None:
        quota = max(1, opts.node_budget // max(1, len(pending)))

    # a quota-exhausted subtree stays in the queue so that a resumed run can
    # finish it; the session then stops and reports complete=False
    exhausted_any = False
    if opts.threads > 1:
        import multiprocessing as mp

        ctx = mp.get_context("fork")
        batch = max(1, opts.threads * opts.checkpoint_every)
        with ctx.Pool(opts.threads) as pool:
            while pending:
                now, rest = pending[:batch], pending[batch:]
                chunks = [now[i::opts.threads] for i in range(opts.threads)]
                chunks = [c for c in chunks if c]
                args = [(spec.cycle, n, budgets, not opts.disable_pair_prune,
                         chunk, quota) for chunk in chunks]
                requeue = []
                for coll, wstats, exhausted in pool.map(_worker_task, args):
                    collector.update(coll)
                    stats.merge(wstats)
                    requeue.extend(exhausted)
                pending = requeue + rest
                if opts.checkpoint_path:
                    _save_checkpoint(opts.checkpoint_path, header, pending,
                                     collector, stats)
                if requeue:
                    exhausted_any = True
                    break
    else:
        since_save = 0
        while pending:
            path = pending[0]
            st = _fresh_search(spec.cycle, n, budgets, not opts.disable_pair_prune)
            ok = _run(st, stats, collector, prefix=path, node_quota=quota)
            if not ok:
                exhausted_any = True
                break
            pending.pop(0)
            since_save += 1
            if opts.checkpoint_path and since_save >= opts.checkpoint_every:
                _save_checkpoint(opts.checkpoint_path, header, pending,
                                 collector, stats)
                since_save = 0
        if opts.checkpoint_path:
            _save_checkpoint(opts.checkpoint_path, header, pending, collector, stats)
    return finish(collector, not exhausted_any)


def exists_any(t, n: int, chi: int, opts: EnumOptions | None = None) -> Optional[CombMap]:
    """First completed map in the deterministic search order, or None when
    the whole tree is exhausted.  Runs serially; honors the node budget by
    raising nothing and returning None (check the result of enumerate_maps
    for budget diagnostics when that distinction matters)."""
    opts = opts or EnumOptions()
    spec = _normalize_type(t)
    if _consistency_diagnostic(spec, n, chi) is not None:
        return None
    if closed_star_size(spec) > n:
        return None
    budgets = face_counts(spec, n)
    st = _fresh_search(spec.cycle, n, budgets, not opts.disable_pair_prune,
                       opts.fresh_first)
    if st is None:
        return None
    stats = EnumerationStats()
    collector: dict = {}
    try:
        _run(st, stats, collector, node_quota=opts.node_budget, first_only=True)
    except _StopSearch:
        pass
    if not collector:
        return None
    code = min(collector)
    return build_from_faces(FaceListMap(n, collector[code]))
