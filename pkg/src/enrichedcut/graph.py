"""Enriched graphs: multigraphs with optional self-loops.

Vertices are the integers ``0..n-1``.  Loops are boolean per vertex and an
edge is an unordered pair ``(u, v)`` with ``u < v`` carrying a positive
multiplicity.  Neither loops nor multiplicities add to the degree of a
vertex.
"""

from __future__ import annotations

from collections import deque
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import InputError

Edge = tuple[int, int]


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class EnrichedGraph:
    """Immutable multigraph with per-vertex loop flags."""

    __slots__ = ("n", "loops", "_edges", "_adj", "_hash")

    def __init__(self, n: int, loops: Iterable[int] = (), edges=None):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        self.n = int(n)
        self.loops = frozenset(int(v) for v in loops)
        for v in self.loops:
            if not 0 <= v < n:
                raise InputError(f"loop on vertex {v} out of range for n={n}")
        if edges is None:
            edges = {}
        items = edges.items() if isinstance(edges, Mapping) else ((e, 1) for e in edges)
        emap: dict[Edge, int] = {}
        for (u, v), m in items:
            u, v, m = int(u), int(v), int(m)
            if u == v:
                raise InputError(f"self-pair ({u}, {v}) is not an edge; use loops")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if m < 1:
                raise InputError(f"edge ({u}, {v}) has multiplicity {m} < 1")
            k = _key(u, v)
            emap[k] = emap.get(k, 0) + m
        self._edges = dict(sorted(emap.items()))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(a) for a in adj)
        self._hash = None

    # basic accessors -----------------------------------------------------

    @property
    def edges(self) -> Mapping[Edge, int]:
        return MappingProxyType(self._edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def has_loop(self, v: int) -> bool:
        return v in self.loops

    def multiplicity(self, u: int, v: int) -> int:
        return self._edges.get(_key(u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return _key(u, v) in self._edges

    def edge_count(self) -> int:
        """Number of distinct adjacent pairs (multiplicity ignored)."""
        return len(self._edges)

    def total_multiplicity(self) -> int:
        return sum(self._edges.values())

    def max_multiplicity(self) -> int:
        return max(self._edges.values(), default=0)

    def is_simple(self) -> bool:
        return not self.loops and all(m == 1 for m in self._edges.values())

    def is_loopless(self) -> bool:
        return not self.loops

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")

    # derived graphs ------------------------------------------------------

    def induced(self, keep: Iterable[int]) -> tuple["EnrichedGraph", list[int]]:
        """Induced subgraph on ``keep``, relabelled in ascending order.

        Returns the graph and the list mapping new ids to old ids.
        """
        old = sorted(set(keep))
        new_of = {o: i for i, o in enumerate(old)}
        edges = {
            (new_of[u], new_of[v]): m
            for (u, v), m in self._edges.items()
            if u in new_of and v in new_of
        }
        loops = [new_of[v] for v in self.loops if v in new_of]
        return EnrichedGraph(len(old), loops, edges), old

    def without(self, removed: Iterable[int]) -> tuple["EnrichedGraph", list[int]]:
        removed = set(removed)
        return self.induced(v for v in range(self.n) if v not in removed)

    def with_loops(self, extra: Iterable[int]) -> "EnrichedGraph":
        return EnrichedGraph(self.n, self.loops | set(extra), self._edges)

    # connectivity --------------------------------------------------------

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        gone = set(removed)
        seen = set(gone)
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # dunder --------------------------------------------------------------

    def _identity(self):
        return (self.n, tuple(sorted(self.loops)), tuple(self._edges.items()))

    def __eq__(self, other):
        if not isinstance(other, EnrichedGraph):
            return NotImplemented
        return self._identity() == other._identity()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._identity())
        return self._hash

    def __repr__(self):
        return (
            f"EnrichedGraph(n={self.n}, loops={sorted(self.loops)}, "
            f"edges={dict(self._edges)})"
        )


# SimplePattern is an EnrichedGraph with no loops and multiplicity 1; the
# alias documents intent at function boundaries.
SimplePattern = EnrichedGraph


def simple_graph(n: int, edges: Iterable[Edge]) -> EnrichedGraph:
    return EnrichedGraph(n, (), {_key(u, v): 1 for u, v in edges})


def degree(g: EnrichedGraph, v: int) -> int:
    """Number of distinct neighbours of ``v``; loops and multiplicity ignored."""
    return len(g.neighbors(v))


def max_degree(g: EnrichedGraph) -> int:
    return max((len(g.neighbors(v)) for v in g.vertices()), default=0)


def underlying_simple(g: EnrichedGraph) -> SimplePattern:
    return EnrichedGraph(g.n, (), {e: 1 for e in g.edges})


def disjoint_union(*graphs: EnrichedGraph) -> EnrichedGraph:
    n = 0
    loops, edges = [], {}
    for g in graphs:
        loops.extend(v + n for v in g.loops)
        for (u, v), m in g.edges.items():
            edges[(u + n, v + n)] = m
        n += g.n
    return EnrichedGraph(n, loops, edges)


def _require_loopless(g: EnrichedGraph, what: str) -> None:
    if g.loops:
        raise InputError(f"{what} is defined for loopless multigraphs only")


def p_subdivision(g: SimplePattern, p: int) -> SimplePattern:
    """Replace every edge by a path with ``p`` internal vertices.

    New vertices are numbered from ``g.n`` on, edge by edge in sorted edge
    order, each run listed from the smaller endpoint towards the larger.
    """
    if p < 1:
        raise InputError(f"subdivision parameter must be >= 1, got {p}")
    if not g.is_simple():
        raise InputError("p_subdivision expects a simple graph")
    n = g.n
    edges = []
    for u, v in g.edges:
        chain = [u] + list(range(n, n + p)) + [v]
        n += p
        edges.extend(zip(chain, chain[1:]))
    return simple_graph(n, edges)


def line_graph(g: EnrichedGraph) -> SimplePattern:
    """Line graph of a multigraph; every parallel copy is its own vertex.

    Copies are numbered consecutively in sorted edge order.
    """
    _require_loopless(g, "line_graph")
    copies: list[Edge] = []
    for e, m in g.edges.items():
        copies.extend([e] * m)
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(copies):
        incident[u].append(i)
        incident[v].append(i)
    edges = set()
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                edges.add((ids[a], ids[b]))
    return simple_graph(len(copies), edges)


def star_line_graph(g: EnrichedGraph) -> EnrichedGraph:
    """Line graph of the underlying simple graph, looping multi-edge vertices."""
    _require_loopless(g, "star_line_graph")
    base = line_graph(underlying_simple(g))
    looped = [i for i, m in enumerate(g.edges.values()) if m >= 2]
    return base.with_loops(looped)


def multiedge_to_triangle(g: EnrichedGraph) -> SimplePattern:
    """Cap multiplicities at 2, then swap every double edge for a triangle.

    Each double edge ``{u, v}`` (sorted order) gets one fresh vertex adjacent
    to both ends; the edge ``{u, v}`` itself stays, with multiplicity one.
    """
    _require_loopless(g, "multiedge_to_triangle")
    n = g.n
    edges = []
    for (u, v), m in g.edges.items():
        edges.append((u, v))
        if m >= 2:
            edges += [(u, n), (v, n)]
            n += 1
    return simple_graph(n, edges)


def multiedge_to_clique(g: EnrichedGraph, d: int) -> SimplePattern:
    """Cap multiplicities at ``d + 1``; an edge of multiplicity ``m >= 2``
    becomes a clique of size ``m + 1`` through ``m - 1`` fresh vertices.

    Only at ``d = 1`` does this preserve the existence of a d-cut; for larger
    ``d`` a capped edge (forced to one side) turns into a clique that can be
    split 2/2 or so.  See :func:`multiedge_to_forcing_cliques` for a variant
    that is answer-preserving for every ``d``.
    """
    _require_loopless(g, "multiedge_to_clique")
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}")
    n = g.n
    edges = []
    for (u, v), m in g.edges.items():
        m = min(m, d + 1)
        members = [u, v] + list(range(n, n + m - 1))
        n += m - 1
        edges += [(a, b) for i, a in enumerate(members) for b in members[i + 1 :]]
    return simple_graph(n, edges)


def multiedge_to_forcing_cliques(g: EnrichedGraph, d: int) -> SimplePattern:
    """Answer-preserving simple-graph encoding of a multigraph for d-cut.

    A clique on ``2d + 2`` vertices can never be split by a d-cut, so it glues
    its members to one side.  An edge of multiplicity ``m > d`` becomes such a
    clique through ``u`` and ``v``.  An edge of multiplicity ``2 <= m <= d``
    keeps one copy of ``uv``; each further copy becomes a vertex ``a`` glued to
    ``v`` (adjacent to ``u``) and a vertex ``b`` glued to ``u`` (adjacent to
    ``v``), so crossing the edge still costs both ends exactly ``m``.
    """
    _require_loopless(g, "multiedge_to_forcing_cliques")
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}")
    n = g.n
    edges = []

    def glue(anchor):
        nonlocal n
        members = [anchor] + list(range(n, n + 2 * d + 1))
        n += 2 * d + 1
        edges.extend((a, b) for i, a in enumerate(members) for b in members[i + 1 :])
        return members[1]

    for (u, v), m in g.edges.items():
        if m > d:
            members = [u, v] + list(range(n, n + 2 * d))
            n += 2 * d
            edges.extend((a, b) for i, a in enumerate(members) for b in members[i + 1 :])
            continue
        edges.append((u, v))
        for _ in range(m - 1):
            a = glue(v)
            b = glue(u)
            edges += [(u, a), (v, b)]
    return simple_graph(n, edges)
