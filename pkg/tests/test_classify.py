import random

import pytest

from enrichedcut.builders import pattern
from enrichedcut.classify import (
    NPC,
    UNKNOWN,
    MultigraphDCut,
    MultigraphMatchingCut,
    P,
    PartiallyReflexiveStableCut,
    classify,
    parse_problem,
)
from enrichedcut.errors import InputError
from enrichedcut.graph import EnrichedGraph

MMC, PRSC = MultigraphMatchingCut(), PartiallyReflexiveStableCut()

POOL = (
    ["P3", "P5", "P8", "C3", "C4", "C5", "C6", "K1_3", "K1_4", "K4", "H1", "H2", "H3"]
    + ["N1_1_1", "N1_1_2", "N2_2_2", "N1_1_0", "N0_0_0", "2*N1_1_1", "2*P3"]
    + ["H1p2_2_2_1", "H1p2_2_2_2", "H1p3_3_3_3", "H1p1_1_1_2"]
)


def cls(problem, *names):
    return classify(parse_problem(problem), [pattern(n) for n in names])


class TestExamples:
    def test_mmc_p5(self):
        v = cls("mmc", "P5")
        assert v.tag == P and v.citation

    def test_prsc_c3_h12(self):
        v = cls("prsc", "C3", "H1p2_2_2_2")
        assert v.tag == NPC and "C3" in v.citation

    def test_prsc_h1_net(self):
        v = cls("prsc", "H1", "N1_1_1")
        assert v.tag == P and "1*N1_1_1" in v.citation

    def test_prsc_unknown(self):
        v = cls("prsc", "N2_2_2", "H1p3_3_3_3")
        assert v.tag == UNKNOWN and v.citation == "" and v.neighbours

    def test_dcut_k4(self):
        v = cls("dcut:2", "K4")
        assert v.tag == NPC and v.citation


class TestRules:
    def test_class_s_wins_for_every_problem(self):
        for p in ("mmc", "dcut:3", "prsc"):
            assert cls(p, "K1_3", "C3").tag == P

    def test_h2221_pair(self):
        assert cls("prsc", "H1p2_2_2_1", "C3").tag == P

    def test_supersets_of_tractable_pairs(self):
        assert cls("prsc", "H1", "N1_1_2", "C5").tag == P

    def test_missing_family_is_hard(self):
        # nothing forbidden embeds in an H1 subdivision
        assert cls("prsc", "N1_1_1").tag == NPC
        assert cls("prsc", "C4").tag == NPC

    def test_non_simple_rejected(self):
        with pytest.raises(InputError):
            classify(PRSC, [EnrichedGraph(2, [0], [(0, 1)])])

    def test_deterministic(self):
        a = cls("prsc", "N2_2_2", "H1p3_3_3_3")
        assert a == cls("prsc", "N2_2_2", "H1p3_3_3_3")


class TestParse:
    def test_ok(self):
        assert parse_problem("MMC") == MMC
        assert parse_problem("dcut:4") == MultigraphDCut(4)
        assert str(parse_problem("prsc")) == "prsc"

    @pytest.mark.parametrize("text", ["dcut:x", "dcut:1", "stable", ""])
    def test_errors(self, text):
        with pytest.raises(InputError):
            parse_problem(text)


def test_monotone_consistency():
    r = random.Random(7)
    built = {n: pattern(n) for n in POOL}
    for _ in range(150):
        base = r.sample(POOL, r.randint(1, 3))
        extra = base + r.sample([n for n in POOL if n not in base], r.randint(1, 2))
        for p in (MMC, MultigraphDCut(2), PRSC):
            small = classify(p, [built[n] for n in base]).tag
            big = classify(p, [built[n] for n in extra]).tag
            assert not (small == P and big == NPC), (p, base, extra)
            assert not (small == P and big == UNKNOWN), (p, base, extra)
