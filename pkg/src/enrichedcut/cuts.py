"""Exact solvers and certificate checkers for the three cut problems.

All solvers are exhaustive searches, fine at desk scale only.

Enumeration orders (they fix which certificate is returned):

* matching cut / d-cut: adjacent vertices that no d-cut can separate (an
  edge of multiplicity ``> d``, or too many shared neighbours) are merged
  into groups (numbered by smallest member); groups are visited
  in BFS order from the group of vertex 0, which is put on side A; each
  later group tries A before B.  A disconnected input returns the split
  "component of vertex 0 vs the rest" straight away.
* stable cut: independent sets of loopless vertices by increasing size,
  lexicographically within a size.
* P3 homomorphism: vertices in id order, targets tried left, right, middle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import InputError
from .graph import EnrichedGraph

LEFT, MIDDLE, RIGHT = "left", "middle", "right"


@dataclass(frozen=True)
class Bipartition:
    a: frozenset
    b: frozenset

    @classmethod
    def from_sides(cls, a: Iterable[int], b: Iterable[int]) -> "Bipartition":
        return cls(frozenset(a), frozenset(b))

    def side(self, v: int) -> str:
        return "A" if v in self.a else "B"

    def render(self) -> str:
        return "A: " + " ".join(map(str, sorted(self.a))) + "\nB: " + " ".join(
            map(str, sorted(self.b))
        )


def _check_partition(g: EnrichedGraph, p: Bipartition) -> bool:
    if p.a & p.b or (p.a | p.b) != set(g.vertices()):
        raise InputError("bipartition must cover every vertex exactly once")
    return bool(p.a) and bool(p.b)


def _loopless(g: EnrichedGraph, what: str) -> None:
    if g.loops:
        raise InputError(f"{what}: input must be loopless")


def _check_d(d: int) -> None:
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}")


def verify_d_cut(g: EnrichedGraph, d: int, p: Bipartition) -> bool:
    _loopless(g, "verify_d_cut")
    _check_d(d)
    if not _check_partition(g, p):
        return False
    crossing = [0] * g.n
    for (u, v), m in g.edges.items():
        if (u in p.a) != (v in p.a):
            crossing[u] += m
            crossing[v] += m
    return max(crossing, default=0) <= d


def verify_matching_cut(g: EnrichedGraph, p: Bipartition) -> bool:
    """Both sides used, no multi-edge crosses, at most one cross neighbour each."""
    _loopless(g, "verify_matching_cut")
    return verify_d_cut(g, 1, p)


def solve_d_cut(g: EnrichedGraph, d: int) -> Optional[Bipartition]:
    _loopless(g, "solve_d_cut")
    _check_d(d)
    if g.n < 2:
        return None
    comps = g.components()
    if len(comps) > 1:
        first = set(comps[0])
        return Bipartition.from_sides(first, set(g.vertices()) - first)

    # groups of vertices that must share a side
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v), m in g.edges.items():
        # split u from v and the uv copies plus, for every common neighbour,
        # the lighter of its two edges all cross; both ends share a budget 2d
        shared = sum(
            min(g.multiplicity(u, w), g.multiplicity(v, w))
            for w in g.neighbors(u) & g.neighbors(v)
        )
        if m > d or 2 * m + shared > 2 * d:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    members: dict[int, list[int]] = {}
    for v in g.vertices():
        members.setdefault(find(v), []).append(v)
    if len(members) < 2:
        return None
    gid = {r: i for i, r in enumerate(sorted(members))}
    group_of = [gid[find(v)] for v in g.vertices()]
    groups = [members[r] for r in sorted(members)]

    # light edges between distinct groups, per vertex
    light: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for (u, v), m in g.edges.items():
        if group_of[u] != group_of[v]:
            light[u].append((v, m))
            light[v].append((u, m))

    # BFS order over the group graph
    gadj: list[set[int]] = [set() for _ in groups]
    for u in g.vertices():
        for v, _ in light[u]:
            gadj[group_of[u]].add(group_of[v])
    order, seen = [], {0}
    queue = [0]
    while queue:
        x = queue.pop(0)
        order.append(x)
        for y in sorted(gadj[x]):
            if y not in seen:
                seen.add(y)
                queue.append(y)

    side = [None] * len(groups)
    crossing = [0] * g.n

    def place(i: int, count_b: int) -> bool:
        if i == len(order):
            return count_b > 0
        grp = order[i]
        choices = ("A",) if i == 0 else ("A", "B")
        for s in choices:
            touched = []
            ok = True
            for u in groups[grp]:
                for v, m in light[u]:
                    sv = side[group_of[v]]
                    if sv is not None and sv != s:
                        crossing[u] += m
                        crossing[v] += m
                        touched.append((u, v, m))
                        if crossing[u] > d or crossing[v] > d:
                            ok = False
            if ok:
                side[grp] = s
                if place(i + 1, count_b + (s == "B")):
                    return True
                side[grp] = None
            for u, v, m in touched:
                crossing[u] -= m
                crossing[v] -= m
        return False

    if not place(0, 0):
        return None
    a = [v for v in g.vertices() if side[group_of[v]] == "A"]
    b = [v for v in g.vertices() if side[group_of[v]] == "B"]
    return Bipartition.from_sides(a, b)


def solve_matching_cut(g: EnrichedGraph) -> Optional[Bipartition]:
    _loopless(g, "solve_matching_cut")
    return solve_d_cut(g, 1)


# -- stable cut ------------------------------------------------------------


def is_independent(g: EnrichedGraph, c: Iterable[int]) -> bool:
    c = set(c)
    return all(not (g.neighbors(v) & c) for v in c)


def verify_stable_cut(g: EnrichedGraph, c: Iterable[int]) -> bool:
    """Nonempty independent set of loopless vertices whose removal leaves a
    disconnected graph (so at least two vertices remain)."""
    c = set(c)
    if not c or any(not 0 <= v < g.n for v in c):
        return False
    if c & g.loops or not is_independent(g, c):
        return False
    return len(g.components(removed=c)) >= 2


def independent_loopless_sets(g: EnrichedGraph, pool: Optional[Iterable[int]] = None) -> Iterator[tuple[int, ...]]:
    """Nonempty independent loopless subsets of ``pool``: by size, then lex."""
    cand = sorted(v for v in (g.vertices() if pool is None else pool) if v not in g.loops)

    def grow(start: int, size: int, chosen: list[int], blocked: set[int]):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, len(cand)):
            v = cand[i]
            if v in blocked:
                continue
            chosen.append(v)
            yield from grow(i + 1, size, chosen, blocked | g.neighbors(v))
            chosen.pop()

    for size in range(1, len(cand) + 1):
        found = False
        for s in grow(0, size, [], set()):
            found = True
            yield s
        if not found:
            return


def solve_stable_cut(g: EnrichedGraph) -> Optional[frozenset]:
    if g.n < 3:
        return None
    for c in independent_loopless_sets(g):
        if len(g.components(removed=c)) >= 2:
            return frozenset(c)
    return None


def surjective_hom_p3(g: EnrichedGraph) -> Optional[dict[int, str]]:
    """Surjective homomorphism to the path left - middle - right whose two
    ends carry loops.  Its middle preimage is a stable cut."""
    n = g.n
    if n < 3:
        return None
    adj = [sorted(g.neighbors(v)) for v in g.vertices()]
    label: list[Optional[str]] = [None] * n
    allowed = {
        LEFT: {LEFT, MIDDLE},
        RIGHT: {RIGHT, MIDDLE},
        MIDDLE: {LEFT, RIGHT},
    }
    counts = {LEFT: 0, MIDDLE: 0, RIGHT: 0}

    def assign(v: int) -> bool:
        if v == n:
            return all(counts.values())
        missing = sum(1 for x in counts.values() if x == 0)
        if missing > n - v:
            return False
        for t in (LEFT, RIGHT, MIDDLE):
            if t == MIDDLE and v in g.loops:
                continue
            # break the left/right symmetry: right only after some left
            if t == RIGHT and counts[LEFT] == 0:
                continue
            if any(label[u] is not None and label[u] not in allowed[t] for u in adj[v]):
                continue
            label[v] = t
            counts[t] += 1
            if assign(v + 1):
                return True
            counts[t] -= 1
            label[v] = None
        return False

    if not assign(0):
        return None
    return {v: label[v] for v in range(n)}
