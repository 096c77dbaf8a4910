"""Complexity verdicts for the three cut problems on H-subgraph-free graphs.

Rules, in order:

a. a forbidden graph lies in class S: polynomial for every problem;
b. matching cut and d-cut: NP-complete otherwise;
c. stable cut: NP-complete when no forbidden graph embeds in the
   triangle-clause hardness family (``is_net_like``) or none embeds in the
   cycle-clause family (``is_h1_like``), since that family then lies inside
   the class;
d. stable cut: polynomial when every graph of a known tractable pair
   contains a forbidden graph; NP-complete when every forbidden graph is
   ``C3`` or ``H1^2``;
e. otherwise unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .builders import H1, Cycle, Disjoint, H1Pendant, Net, build_pattern
from .errors import InputError, InvariantError
from .graph import SimplePattern
from .pattern import contains_subgraph, in_class_S, is_h1_like, is_isomorphic, is_net_like

P, NPC, UNKNOWN = "P", "NP-complete", "Unknown"


@dataclass(frozen=True)
class MultigraphMatchingCut:
    def __str__(self):
        return "mmc"


@dataclass(frozen=True)
class MultigraphDCut:
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise InputError("d-cut needs d >= 2; d = 1 is matching cut")

    def __str__(self):
        return f"dcut:{self.d}"


@dataclass(frozen=True)
class PartiallyReflexiveStableCut:
    def __str__(self):
        return "prsc"


ProblemId = Union[MultigraphMatchingCut, MultigraphDCut, PartiallyReflexiveStableCut]


def parse_problem(text: str) -> ProblemId:
    text = text.strip().lower()
    if text == "mmc":
        return MultigraphMatchingCut()
    if text == "prsc":
        return PartiallyReflexiveStableCut()
    if text.startswith("dcut:"):
        try:
            d = int(text[5:])
        except ValueError:
            raise InputError(f"bad d in {text!r}") from None
        return MultigraphDCut(d)
    raise InputError(f"unknown problem {text!r}; use mmc, dcut:<d> or prsc")


@dataclass(frozen=True)
class Verdict:
    tag: str
    citation: str
    derivation: tuple[str, ...] = ()
    neighbours: tuple[str, ...] = field(default=())


def _embeds(small: SimplePattern, big: SimplePattern) -> bool:
    return contains_subgraph(big, small) is not None


def _inside(hs, target: SimplePattern) -> Optional[int]:
    """Index of the first forbidden graph that is a subgraph of ``target``."""
    return next((i for i, h in enumerate(hs) if _embeds(h, target)), None)


def _n11l_witness(hs) -> Optional[tuple[int, int]]:
    """(member index, smallest l) with the member inside ``N_{1,1,l}``."""
    best = None
    for i, h in enumerate(hs):
        for l in range(0, h.n + 1):
            if _embeds(h, build_pattern(Net(1, 1, l))):
                if best is None or l < best[1]:
                    best = (i, l)
                break
    return best


def _rnet_witness(hs) -> Optional[tuple[int, int]]:
    """(member index, smallest r) with the member inside ``r`` disjoint nets."""
    best = None
    for i, h in enumerate(hs):
        r = max(1, len(h.components()))
        if _embeds(h, build_pattern(Disjoint(r, Net(1, 1, 1)))):
            if best is None or r < best[1]:
                best = (i, r)
    return best


def _tractable(hs) -> tuple[Optional[str], list[str]]:
    """First tractable pair covered by ``hs``; also which pairs half-match."""
    h1 = build_pattern(H1())
    near = []
    in_h1 = _inside(hs, h1)
    n11l = _n11l_witness(hs)
    rnet = _rnet_witness(hs)
    if in_h1 is not None and rnet is not None:
        return f"tractable pair {{H1, {rnet[1]}*N1_1_1}}", near
    if in_h1 is not None and n11l is not None:
        return f"tractable pair {{H1, N1_1_{n11l[1]}}}", near
    in_h2221 = _inside(hs, build_pattern(H1Pendant(2, 2, 2, 1)))
    in_c3 = _inside(hs, build_pattern(Cycle(3)))
    if in_h2221 is not None and in_c3 is not None:
        return "tractable pair {H1p2_2_2_1, C3}", near
    if in_h1 is not None:
        near.append("P if some forbidden graph were a subgraph of N1_1_l or of r*N1_1_1")
    elif n11l is not None or rnet is not None:
        near.append("P if some forbidden graph were a subgraph of H1")
    if in_h2221 is not None and in_c3 is None:
        near.append("P if some forbidden graph were a subgraph of C3")
    elif in_c3 is not None and in_h2221 is None:
        near.append("P if some forbidden graph were a subgraph of H1p2_2_2_1")
    return None, near


def _c3_h12_subset(hs) -> bool:
    base = [build_pattern(Cycle(3)), build_pattern(H1Pendant(2, 2, 2, 2))]
    return all(any(is_isomorphic(h, b) for b in base) for h in hs)


def classify(p: ProblemId, hs: Sequence[SimplePattern]) -> Verdict:
    hs = list(hs)
    for h in hs:
        if not h.is_simple():
            raise InputError("forbidden graphs must be simple")
    deriv = []
    s_member = next((i for i, h in enumerate(hs) if in_class_S(h)), None)
    if s_member is not None:
        deriv.append(f"a: forbidden graph #{s_member} is in class S")
        return Verdict(P, "class-S dichotomy: bounded treewidth on the free class", tuple(deriv))
    deriv.append("a: no forbidden graph is in class S")
    if not isinstance(p, PartiallyReflexiveStableCut):
        deriv.append("b: matching-type cut problem")
        return Verdict(NPC, "class-S dichotomy: hard on subdivided subcubic graphs", tuple(deriv))

    hard = []
    if not any(is_net_like(h) for h in hs):
        hard.append("c: no forbidden graph embeds in the triangle-clause construction")
    if not any(is_h1_like(h) for h in hs):
        hard.append("c: no forbidden graph embeds in the cycle-clause construction")
    if _c3_h12_subset(hs):
        hard.append("d: every forbidden graph is C3 or H1^2")
    pair, near = _tractable(hs)
    if pair is not None and hard:
        raise InvariantError(f"both P ({pair}) and NP-complete ({hard[0]}) apply")
    if hard:
        cite = (
            "stable cut: clause-gadget hardness with large subdivision"
            if hard[0].startswith("c:")
            else "stable cut: NP-complete on {C3, H1^2}-subgraph-free graphs"
        )
        return Verdict(NPC, cite, tuple(deriv + hard))
    deriv.append("c: some forbidden graph is net-like and some is H1-like")
    if pair is not None:
        deriv.append(f"d: {pair}")
        return Verdict(P, f"stable cut: {pair}", tuple(deriv))
    deriv.append("d: no tractable pair is covered and the set is not inside {C3, H1^2}")
    near.append("NP-complete if every forbidden graph were C3 or H1^2")
    return Verdict(UNKNOWN, "", tuple(deriv), tuple(near))
