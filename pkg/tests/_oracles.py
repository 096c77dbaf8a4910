"""Independent brute-force oracles, written against networkx rather than the
package's own solvers."""

from itertools import combinations, product

import networkx as nx

from enrichedcut.graph import EnrichedGraph


def to_nx(g: EnrichedGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def bipartitions(n):
    """Every unordered split into two nonempty sides (vertex 0 in A)."""
    for bits in product((0, 1), repeat=max(n - 1, 0)):
        a = {0} | {i + 1 for i, b in enumerate(bits) if b == 0}
        if n >= 2 and len(a) < n:
            yield a, set(range(n)) - a


def d_cut_exists(g: EnrichedGraph, d: int) -> bool:
    for a, _ in bipartitions(g.n):
        load = [0] * g.n
        for (u, v), m in g.edges.items():
            if (u in a) != (v in a):
                load[u] += m
                load[v] += m
        if max(load) <= d:
            return True
    return False


def matching_cut_exists(g: EnrichedGraph) -> bool:
    for a, _ in bipartitions(g.n):
        cross = [(u, v) for (u, v) in g.edges if (u in a) != (v in a)]
        if any(g.edges[e] > 1 for e in cross):
            continue
        ends = [x for e in cross for x in e]
        if len(ends) == len(set(ends)):
            return True
    return False


def is_stable_cut(g: EnrichedGraph, c) -> bool:
    c = set(c)
    if not c or c & set(g.loops):
        return False
    if any(g.has_edge(u, v) for u, v in combinations(sorted(c), 2)):
        return False
    rest = to_nx(g)
    rest.remove_nodes_from(c)
    return rest.number_of_nodes() >= 2 and not nx.is_connected(rest)


def stable_cut_exists(g: EnrichedGraph) -> bool:
    free = [v for v in range(g.n) if v not in g.loops]
    return any(is_stable_cut(g, c) for r in range(1, len(free) + 1) for c in combinations(free, r))


def nae_third(f) -> bool:
    for a in product((False, True), repeat=f.nvars):
        if all(a) or not any(a):
            continue
        ok = True
        for c in f.clauses:
            vals = {(a[abs(l) - 1] if l > 0 else not a[abs(l) - 1]) for l in c}
            if len(vals) == 1:
                ok = False
                break
        if ok:
            return True
    return False


def from_nx(h: nx.Graph) -> EnrichedGraph:
    h = nx.convert_node_labels_to_integers(h)
    return EnrichedGraph(h.number_of_nodes(), (), {tuple(sorted(e)): 1 for e in h.edges})


def random_graph(rng, n, p=0.4, maxmult=1, loopp=0.0) -> EnrichedGraph:
    loops = [v for v in range(n) if rng.random() < loopp]
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges[(u, v)] = rng.randint(1, maxmult)
    return EnrichedGraph(n, loops, edges)
