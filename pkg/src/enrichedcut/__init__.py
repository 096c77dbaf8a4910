"""Matching cut, d-cut and stable cut on multigraphs and partially reflexive graphs."""

from .classify import (
    MultigraphDCut,
    MultigraphMatchingCut,
    PartiallyReflexiveStableCut,
    Verdict,
    classify,
    parse_problem,
)
from .cuts import (
    Bipartition,
    solve_d_cut,
    solve_matching_cut,
    solve_stable_cut,
    surjective_hom_p3,
    verify_d_cut,
    verify_matching_cut,
    verify_stable_cut,
)
from .errors import InputError, InvariantError, ParseError, PreconditionError, StructuralGuaranteeError
from .formats import parse_graph, parse_nae, render_graph, render_nae
from .gadgets import GadgetInstance, mmc_to_dcut, nae01_to_mmc, nae01_to_prsc_cycle, nae01_to_prsc_triangle
from .graph import EnrichedGraph
from .kernel import EarlyNo, EarlyYes, Reduced, reduce_gen_obs, reduce_h_obs, reduce_small_cut
from .nae import NaeFormula, mc_to_nae01, solve_nae01
from .poly import solve_h1_n11l, solve_h1_rnet, solve_h2221_c3

__version__ = "0.1.0"
