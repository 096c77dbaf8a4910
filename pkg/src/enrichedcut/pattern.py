"""Non-induced subgraph containment and the pattern-class recognisers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .graph import EnrichedGraph, SimplePattern, degree, max_degree

ForbiddenSet = Sequence[SimplePattern]


def _order(pattern: EnrichedGraph) -> list[int]:
    # descending degree; afterwards prefer vertices with many placed neighbours
    remaining = set(pattern.vertices())
    order: list[int] = []
    placed: set[int] = set()
    while remaining:
        best = max(
            remaining,
            key=lambda v: (
                len(pattern.neighbors(v) & placed),
                len(pattern.neighbors(v)),
                -v,
            ),
        )
        order.append(best)
        placed.add(best)
        remaining.discard(best)
    return order


def contains_subgraph(host: EnrichedGraph, pattern: EnrichedGraph) -> Optional[dict[int, int]]:
    """Find an edge-preserving injection ``pattern -> host``.

    Only adjacency matters: loops and multiplicities on either side are
    ignored.  The search is deterministic; ``None`` means no embedding.
    """
    if pattern.n > host.n or pattern.edge_count() > host.edge_count():
        return None
    if pattern.n == 0:
        return {}
    order = _order(pattern)
    hdeg = [len(host.neighbors(v)) for v in host.vertices()]
    pdeg = [len(pattern.neighbors(v)) for v in pattern.vertices()]
    if max(pdeg) > max(hdeg, default=0):
        return None
    mapping: dict[int, int] = {}
    used: set[int] = set()
    # pattern neighbours that precede each position in the order
    earlier = []
    seen: set[int] = set()
    for p in order:
        earlier.append([q for q in pattern.neighbors(p) if q in seen])
        seen.add(p)

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        prev = earlier[i]
        if prev:
            pivot = mapping[prev[0]]
            candidates = sorted(host.neighbors(pivot))
        else:
            candidates = range(host.n)
        for h in candidates:
            if h in used or hdeg[h] < pdeg[p]:
                continue
            if any(not host.has_edge(h, mapping[q]) for q in prev):
                continue
            mapping[p] = h
            used.add(h)
            if extend(i + 1):
                return True
            used.discard(h)
            del mapping[p]
        return False

    return dict(mapping) if extend(0) else None


def is_free(g: EnrichedGraph, hs: ForbiddenSet) -> bool:
    """True iff no member of ``hs`` is a subgraph of g's underlying simple graph."""
    return all(contains_subgraph(g, h) is None for h in hs)


def is_isomorphic(a: EnrichedGraph, b: EnrichedGraph) -> bool:
    """Isomorphism of underlying simple graphs."""
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    if sorted(degree(a, v) for v in a.vertices()) != sorted(degree(b, v) for v in b.vertices()):
        return False
    return contains_subgraph(a, b) is not None


def is_subcubic(g: EnrichedGraph) -> bool:
    return max_degree(g) <= 3


def _is_tree_component(g: EnrichedGraph, comp: list[int]) -> bool:
    cs = set(comp)
    m = sum(1 for (u, v) in g.edges if u in cs)
    return m == len(comp) - 1


def in_class_S(h: SimplePattern) -> bool:
    """Every component is a path or a subcubic tree with one degree-3 vertex."""
    for comp in h.components():
        if not _is_tree_component(h, comp):
            return False
        degs = [degree(h, v) for v in comp]
        if max(degs) > 3:
            return False
        if sum(1 for d in degs if d == 3) > 1:
            return False
    return True


@dataclass(frozen=True)
class NetSubdivision:
    legs: tuple[int, int, int]


@dataclass(frozen=True)
class H1Subdivision:
    legs: tuple[int, int, int, int]


@dataclass(frozen=True)
class Neither:
    pass


PendantClass = Union[NetSubdivision, H1Subdivision, Neither]


def _leg_length(h: EnrichedGraph, start: int, first: int) -> Optional[int]:
    """Walk from ``start`` through ``first`` while degree is 2; the leg must
    end in a degree-1 vertex."""
    prev, cur, length = start, first, 1
    while True:
        d = degree(h, cur)
        if d == 1:
            return length
        if d != 2:
            return None
        (nxt,) = h.neighbors(cur) - {prev}
        prev, cur = cur, nxt
        length += 1


def pendant_class(h: SimplePattern) -> PendantClass:
    """Recognise pendant subdivisions of the net and of ``H1`` structurally."""
    if h.n == 0 or not h.is_connected():
        return Neither()
    degs = [degree(h, v) for v in h.vertices()]
    if max(degs) > 3:
        return Neither()
    cubic = [v for v in h.vertices() if degs[v] == 3]
    m = h.edge_count()
    if m == h.n and len(cubic) == 3:
        a, b, c = cubic
        if not (h.has_edge(a, b) and h.has_edge(b, c) and h.has_edge(a, c)):
            return Neither()
        legs = []
        for v in cubic:
            (out,) = h.neighbors(v) - set(cubic)
            L = _leg_length(h, v, out)
            if L is None:
                return Neither()
            legs.append(L)
        return NetSubdivision(tuple(sorted(legs, reverse=True)))
    if m == h.n - 1 and len(cubic) == 2 and h.has_edge(*cubic):
        legs = []
        for v in cubic:
            for out in sorted(h.neighbors(v) - set(cubic)):
                L = _leg_length(h, v, out)
                if L is None:
                    return Neither()
                legs.append(L)
        return H1Subdivision(tuple(sorted(legs, reverse=True)))
    return Neither()


def is_net_like(h: SimplePattern) -> bool:
    """Every component is a path, a class-S tree, or a triangle carrying at
    most one pendant path per corner (a subgraph of some pendant-subdivided
    net)."""
    for comp in h.components():
        sub, _ = h.induced(comp)
        if in_class_S(sub):
            continue
        degs = [degree(sub, v) for v in sub.vertices()]
        if sub.edge_count() != sub.n or max(degs) > 3:
            return False
        cubic = [v for v in sub.vertices() if degs[v] == 3]
        # unicyclic; the cycle is what survives repeated leaf stripping
        core = _two_core(sub)
        if len(core) != 3:
            return False
        if any(v not in core for v in cubic):
            return False
    return True


def is_h1_like(h: SimplePattern) -> bool:
    """Every component is a path, a class-S tree, or a pendant subdivision of
    ``H1`` (two adjacent degree-3 vertices, four pendant paths)."""
    for comp in h.components():
        sub, _ = h.induced(comp)
        if in_class_S(sub):
            continue
        if not isinstance(pendant_class(sub), H1Subdivision):
            return False
    return True


def _two_core(g: EnrichedGraph) -> set[int]:
    deg = {v: degree(g, v) for v in g.vertices()}
    alive = set(g.vertices())
    stack = [v for v in alive if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
                if deg[u] <= 1:
                    stack.append(u)
    return alive
