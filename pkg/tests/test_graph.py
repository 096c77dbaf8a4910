import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from _oracles import d_cut_exists, from_nx, matching_cut_exists, random_graph, to_nx
from enrichedcut.builders import H1, Cycle, H1Pendant, HMiddle, Net, Path, Star, build_pattern
from enrichedcut.errors import InputError
from enrichedcut.graph import (
    EnrichedGraph,
    degree,
    line_graph,
    multiedge_to_clique,
    multiedge_to_forcing_cliques,
    multiedge_to_triangle,
    p_subdivision,
    simple_graph,
    star_line_graph,
    underlying_simple,
)
from enrichedcut.pattern import in_class_S


def iso(a, b):
    return nx.is_isomorphic(to_nx(a), to_nx(b))


K2 = lambda m: EnrichedGraph(2, (), {(0, 1): m})  # noqa: E731


class TestModel:
    def test_rejects_bad_ids(self):
        with pytest.raises(InputError):
            EnrichedGraph(2, (), {(0, 2): 1})
        with pytest.raises(InputError):
            EnrichedGraph(2, [5])
        with pytest.raises(InputError):
            EnrichedGraph(2, (), {(0, 1): 0})

    def test_equality_and_hash(self):
        a = EnrichedGraph(3, [1], {(1, 0): 2})
        b = EnrichedGraph(3, [1], {(0, 1): 2})
        assert a == b and hash(a) == hash(b)

    def test_degree_conventions(self):
        assert degree(EnrichedGraph(1, [0]), 0) == 0
        assert degree(K2(2), 0) == 1
        assert degree(build_pattern(Star(4)), 0) == 4
        with pytest.raises(InputError):
            degree(K2(1), 7)


class TestBuilders:
    def test_net(self):
        g = build_pattern(Net(1, 1, 1))
        assert (g.n, g.edge_count()) == (6, 6)

    def test_h1_pendant(self):
        g = build_pattern(H1Pendant(2, 2, 2, 1))
        assert (g.n, g.edge_count()) == (9, 8)
        assert build_pattern(H1Pendant(1, 1, 1, 1)) == build_pattern(H1())

    @pytest.mark.parametrize("legs", [(1, 1, 1, 1), (2, 2, 2, 1), (3, 1, 2, 4)])
    def test_h1_pendant_shape(self, legs):
        g = build_pattern(H1Pendant(*legs))
        big = [v for v in g.vertices() if degree(g, v) == 3]
        assert len(big) == 2 and g.has_edge(*big)
        h = to_nx(g)
        h.remove_nodes_from(big)
        assert sorted(len(c) for c in nx.connected_components(h)) == sorted(legs)

    def test_h_middle(self):
        assert build_pattern(HMiddle(1)) == build_pattern(H1())
        h2 = build_pattern(HMiddle(2))
        assert (h2.n, h2.edge_count()) == (7, 6)

    @pytest.mark.parametrize("spec", [Cycle(2), Path(0), Net(-1, 1, 1), H1Pendant(0, 1, 1, 1), Star(0)])
    def test_invalid(self, spec):
        with pytest.raises(InputError):
            build_pattern(spec)


class TestSubdivision:
    def test_examples(self):
        assert iso(p_subdivision(build_pattern(Cycle(3)), 1), build_pattern(Cycle(6)))
        assert iso(p_subdivision(build_pattern(Path(2)), 3), build_pattern(Path(5)))
        assert in_class_S(p_subdivision(build_pattern(Star(3)), 1))

    def test_invalid(self):
        with pytest.raises(InputError):
            p_subdivision(build_pattern(Path(3)), 0)

    @given(st.integers(1, 3), st.integers(0, 2**10 - 1))
    def test_counts(self, p, mask):
        pairs = list(itertools.combinations(range(5), 2))
        g = simple_graph(5, [e for i, e in enumerate(pairs) if mask >> i & 1])
        s = p_subdivision(g, p)
        assert s.edge_count() == (p + 1) * g.edge_count()
        assert all(degree(s, v) == 2 for v in range(g.n, s.n))


class TestUnderlying:
    def test_examples(self):
        assert underlying_simple(K2(2)) == K2(1)
        assert underlying_simple(EnrichedGraph(2, [0])) == EnrichedGraph(2)


class TestLineGraphs:
    def test_line_graph_examples(self):
        assert iso(line_graph(build_pattern(Path(3))), build_pattern(Path(2)))
        assert line_graph(K2(2)) == K2(1)
        assert iso(line_graph(build_pattern(Cycle(3))), build_pattern(Cycle(3)))

    def test_star_line_graph_examples(self):
        p2 = star_line_graph(build_pattern(Path(3)))
        assert p2.n == 2 and not p2.loops
        assert star_line_graph(K2(3)) == EnrichedGraph(1, [0])
        g = EnrichedGraph(3, (), {(0, 1): 2, (1, 2): 1})
        assert star_line_graph(g) == EnrichedGraph(2, [0], {(0, 1): 1})

    def test_loops_rejected(self):
        with pytest.raises(InputError):
            line_graph(EnrichedGraph(1, [0]))
        with pytest.raises(InputError):
            star_line_graph(EnrichedGraph(1, [0]))

    def test_vertex_counts(self, rng):
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 6), 0.5, 3)
            assert line_graph(g).n == g.total_multiplicity()
            assert star_line_graph(g).n == g.edge_count()

    def test_matches_networkx(self, rng):
        for _ in range(30):
            g = random_graph(rng, rng.randint(2, 6), 0.5)
            assert iso(line_graph(g), from_nx(nx.line_graph(to_nx(g))))


class TestMultiedgeTransforms:
    def test_triangle_examples(self):
        assert iso(multiedge_to_triangle(K2(2)), build_pattern(Cycle(3)))
        c4 = build_pattern(Cycle(4))
        assert multiedge_to_triangle(c4) == c4
        assert iso(multiedge_to_triangle(K2(5)), build_pattern(Cycle(3)))

    def test_clique_examples(self):
        k3, k4 = nx.complete_graph(3), nx.complete_graph(4)
        assert nx.is_isomorphic(to_nx(multiedge_to_clique(K2(2), 1)), k3)
        assert nx.is_isomorphic(to_nx(multiedge_to_clique(K2(3), 2)), k4)
        assert nx.is_isomorphic(to_nx(multiedge_to_clique(K2(7), 2)), k4)

    def test_clique_rejects(self):
        with pytest.raises(InputError):
            multiedge_to_clique(K2(1), 0)
        with pytest.raises(InputError):
            multiedge_to_clique(EnrichedGraph(1, [0]), 1)

    def test_triangle_equivalence_oracle(self):
        r = random.Random(1)
        for _ in range(150):
            g = random_graph(r, r.randint(2, 6), 0.5, 3)
            assert matching_cut_exists(g) == matching_cut_exists(multiedge_to_triangle(g))

    def test_clique_equivalence_d1_oracle(self):
        r = random.Random(2)
        for _ in range(150):
            g = random_graph(r, r.randint(2, 6), 0.5, 3)
            assert d_cut_exists(g, 1) == d_cut_exists(multiedge_to_clique(g, 1), 1)

    def test_clique_not_equivalent_for_d2(self):
        # capped at 3, a triple edge forces both ends together; K4 can split 2/2
        g = EnrichedGraph(3, (), {(0, 1): 3, (1, 2): 3})
        assert not d_cut_exists(g, 2)
        assert d_cut_exists(multiedge_to_clique(g, 2), 2)

    @pytest.mark.parametrize("d", [2, 3])
    def test_forcing_cliques_equivalence(self, d):
        from enrichedcut.cuts import solve_d_cut

        r = random.Random(d)
        for _ in range(60):
            g = random_graph(r, r.randint(2, 5), 0.5, 3)
            h = multiedge_to_forcing_cliques(g, d)
            assert h.is_simple()
            assert d_cut_exists(g, d) == (solve_d_cut(h, d) is not None)

