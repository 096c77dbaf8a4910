import json
import random
from fractions import Fraction

import pytest

from enrichedcut import gadgets
from enrichedcut.errors import InputError
from enrichedcut.fuzz import SUITES, FuzzConfig, fuzz_equivalence, random_enriched_graph, random_nae01, replay
from enrichedcut.gadgets import GadgetInstance
from enrichedcut.graph import EnrichedGraph
from enrichedcut.nae import is_nae01_instance


def test_zero_trials():
    rep = fuzz_equivalence(FuzzConfig(trials=0))
    assert not rep.failed and rep.counterexamples == {}
    assert all(rep.counts[s] == {"pass": 0, "fail": 0, "skip": 0} for s in SUITES)


def test_deterministic():
    cfg = FuzzConfig(seed=3, trials=15)
    a, b = fuzz_equivalence(cfg), fuzz_equivalence(cfg)
    assert a.to_json(timings=False) == b.to_json(timings=False)
    assert "seconds" not in json.loads(a.to_json(timings=False))


def test_config_validation():
    assert FuzzConfig(loop_probability=0.3).loop_probability == Fraction(3, 10)
    for bad in ({"trials": -1}, {"max_vertices": 0}, {"loop_probability": 2}, {"suites": ("nope",)}):
        with pytest.raises(InputError):
            FuzzConfig(**bad)


def test_generator_bounds():
    cfg = FuzzConfig(max_vertices=5, max_multiplicity=2, loop_probability=0)
    r = random.Random(1)
    for _ in range(200):
        g = random_enriched_graph(cfg, r)
        assert 1 <= g.n <= 5 and not g.loops
        assert all(1 <= m <= 2 for m in g.edges.values())
    full = FuzzConfig(loop_probability=1)
    g = random_enriched_graph(full, r)
    assert g.loops == frozenset(range(g.n))
    assert all(is_nae01_instance(random_nae01(r)) for _ in range(100))


def test_clean_suites_pass():
    rep = fuzz_equivalence(FuzzConfig(seed=1, trials=40, suites=("reductions", "kernels", "poly")))
    assert not rep.failed, rep.to_json()
    assert all(rep.counts[s]["pass"] > 0 for s in ("reductions", "kernels", "poly"))


def test_mutation_is_caught(monkeypatch):
    def broken(gi, d):
        return GadgetInstance(
            EnrichedGraph(gi.graph.n, (), {e: d for e in gi.graph.edges}),
            gi.variable_anchor,
            gi.clause_anchor,
        )

    monkeypatch.setattr(gadgets, "mmc_to_dcut", broken)
    rep = fuzz_equivalence(FuzzConfig(seed=0, trials=30, suites=("reductions",)))
    assert rep.failed
    assert rep.counterexamples["reductions"].check == "mmc_to_dcut"


def test_replay_round_trip(tmp_path):
    rep = fuzz_equivalence(FuzzConfig(seed=0, trials=20, suites=("bridges",)))
    assert rep.failed
    cx = rep.counterexamples["bridges"]
    path = tmp_path / "case.txt"
    path.write_text(cx.replay_text())
    again = replay(path)
    assert again is not None and again.as_dict() == cx.as_dict()


def test_replay_passing_case(tmp_path):
    path = tmp_path / "ok.txt"
    path.write_text("# check gen_obs\n# seed 0 trial 0\nprg 3\nedge 0 1 1\nedge 1 2 1\n")
    assert replay(path) is None
    path.write_text("prg 1\n")
    with pytest.raises(InputError):
        replay(path)
