import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import bipartitions, d_cut_exists, is_stable_cut, matching_cut_exists, random_graph, stable_cut_exists
from enrichedcut.builders import Cycle, Path, build_pattern
from enrichedcut.cuts import (
    MIDDLE,
    Bipartition,
    solve_d_cut,
    solve_matching_cut,
    solve_stable_cut,
    surjective_hom_p3,
    verify_d_cut,
    verify_matching_cut,
    verify_stable_cut,
)
from enrichedcut.errors import InputError
from enrichedcut.gadgets import nae01_to_mmc, nae01_to_prsc_triangle
from enrichedcut.graph import EnrichedGraph, simple_graph
from enrichedcut.nae import NaeFormula

K4 = simple_graph(4, itertools.combinations(range(4), 2))
C3 = build_pattern(Cycle(3))
C4 = build_pattern(Cycle(4))
P3 = build_pattern(Path(3))
P3_101 = EnrichedGraph(3, [0, 2], [(0, 1), (1, 2)])
CLAUSE = NaeFormula(3, ((-1, 2, 3),))


@st.composite
def enriched(draw, max_n=7, maxmult=3, loops=True):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = {e: draw(st.integers(1, maxmult)) for e in pairs if draw(st.booleans())}
    lp = draw(st.sets(st.integers(0, n - 1))) if loops else set()
    return EnrichedGraph(n, lp, edges)


class TestMatchingCut:
    def test_verify_examples(self):
        assert verify_matching_cut(C4, Bipartition.from_sides({0, 1}, {2, 3}))
        assert not verify_matching_cut(EnrichedGraph(2, (), {(0, 1): 2}), Bipartition.from_sides({0}, {1}))
        for v in range(4):
            assert not verify_matching_cut(K4, Bipartition.from_sides({v}, set(range(4)) - {v}))

    def test_verify_rejects_loops_and_bad_partitions(self):
        with pytest.raises(InputError):
            verify_matching_cut(EnrichedGraph(2, [0]), Bipartition.from_sides({0}, {1}))
        with pytest.raises(InputError):
            verify_matching_cut(C4, Bipartition.from_sides({0}, {1}))
        assert not verify_matching_cut(C4, Bipartition.from_sides(set(), range(4)))

    def test_solve_examples(self):
        assert solve_matching_cut(C4) is not None
        assert solve_matching_cut(K4) is None
        gi = nae01_to_mmc(CLAUSE, 1)
        assert solve_matching_cut(gi.graph) is not None

    def test_solve_rejects_loops(self):
        with pytest.raises(InputError):
            solve_matching_cut(EnrichedGraph(3, [0], [(0, 1)]))

    def test_oracle_agreement(self):
        r = random.Random(3)
        for _ in range(300):
            g = random_graph(r, r.randint(1, 7), r.choice((0.3, 0.5, 0.7)), 3)
            p = solve_matching_cut(g)
            assert (p is not None) == matching_cut_exists(g)
            if p is not None:
                assert verify_matching_cut(g, p)


class TestDCut:
    def test_verify_examples(self):
        split = Bipartition.from_sides({0}, {1})
        assert verify_d_cut(EnrichedGraph(2, (), {(0, 1): 2}), 2, split)
        assert not verify_d_cut(EnrichedGraph(2, (), {(0, 1): 3}), 2, split)
        with pytest.raises(InputError):
            verify_d_cut(C4, 0, Bipartition.from_sides({0, 1}, {2, 3}))

    @given(enriched(max_n=5, loops=False))
    @settings(max_examples=60, deadline=None)
    def test_d1_is_matching_cut(self, g):
        for a, b in bipartitions(g.n):
            p = Bipartition.from_sides(a, b)
            assert verify_d_cut(g, 1, p) == verify_matching_cut(g, p)

    def test_solve_examples(self):
        iso = EnrichedGraph(4, (), [(0, 1), (1, 2)])
        assert solve_d_cut(iso, 1) is not None
        assert solve_d_cut(K4, 2) is not None
        assert solve_d_cut(K4, 1) is None

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_oracle_agreement(self, d):
        r = random.Random(10 + d)
        for _ in range(250):
            g = random_graph(r, r.randint(1, 7), r.choice((0.4, 0.7, 1.0)), 4)
            p = solve_d_cut(g, d)
            assert (p is not None) == d_cut_exists(g, d)
            if p is not None:
                assert verify_d_cut(g, d, p)

    def test_deterministic_certificate(self):
        assert solve_d_cut(K4, 2) == solve_d_cut(K4, 2)


class TestStableCut:
    def test_verify_examples(self):
        assert verify_stable_cut(P3, {1})
        assert all(not verify_stable_cut(C3, {v}) for v in range(3))
        assert verify_stable_cut(P3_101, {1})
        assert not verify_stable_cut(P3_101, {0})
        assert not verify_stable_cut(P3, set())
        assert not verify_stable_cut(C4, {0, 1})

    def test_solve_examples(self):
        assert solve_stable_cut(C3) is None
        gi = nae01_to_prsc_triangle(CLAUSE, 4, 1)
        assert solve_stable_cut(gi.graph) is not None
        full = EnrichedGraph(5, range(5), [(i, i + 1) for i in range(4)])
        assert solve_stable_cut(full) is None

    def test_single_vertex_remainder_is_not_a_cut(self):
        # removing the centre of a 2-leaf star leaves two isolated vertices: a cut
        assert verify_stable_cut(P3, {1})
        # removing {0} from an edge leaves one vertex: not a cut
        assert not verify_stable_cut(simple_graph(2, [(0, 1)]), {0})

    def test_disconnected_strict_definition(self):
        g = EnrichedGraph(2, [0, 1])
        assert solve_stable_cut(g) is None
        g = EnrichedGraph(3, [0, 1], [(0, 1)])
        assert solve_stable_cut(g) is None
        assert solve_stable_cut(EnrichedGraph(3, [0, 1])) == frozenset({2})

    def test_oracle_agreement(self):
        r = random.Random(5)
        for _ in range(300):
            g = random_graph(r, r.randint(1, 7), r.choice((0.3, 0.5, 0.7)), 2, 0.3)
            c = solve_stable_cut(g)
            assert (c is not None) == stable_cut_exists(g)
            if c is not None:
                assert is_stable_cut(g, c)


class TestHomomorphism:
    def test_examples(self):
        h = surjective_hom_p3(P3)
        assert h is not None and h[1] == MIDDLE
        assert surjective_hom_p3(C3) is None
        assert surjective_hom_p3(EnrichedGraph(1, [0])) is None

    @given(enriched())
    @settings(max_examples=200, deadline=None)
    def test_equivalent_to_stable_cut(self, g):
        h = surjective_hom_p3(g)
        assert (h is not None) == (solve_stable_cut(g) is not None)
        if h is not None:
            assert verify_stable_cut(g, {v for v, t in h.items() if t == MIDDLE})
