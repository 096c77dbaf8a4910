"""Stable-cut algorithms for three restricted graph classes.

Each solver preprocesses with the kernel, checks the structural bound the
class guarantees, and finishes with a search confined to the loopless
vertices of the reduced graph.  Bounds are asserted: a violation raises
:class:`InvariantError` instead of silently falling back.
"""

from __future__ import annotations

from typing import Optional

from .builders import H1, H1Pendant, Cycle, Disjoint, Net, Path, build_pattern
from .cuts import independent_loopless_sets, is_independent, verify_stable_cut
from .errors import InputError, InvariantError, PreconditionError
from .graph import EnrichedGraph
from .kernel import EarlyNo, EarlyYes, lift_reduced_cut, reduce_h_obs, reduce_small_cut
from .pattern import contains_subgraph

FALLBACK_LIMIT = 24


def _require_free(g: EnrichedGraph, named: list) -> None:
    for name, spec in named:
        if contains_subgraph(g, build_pattern(spec)) is not None:
            raise PreconditionError(f"input contains {name} as a subgraph")


def _search(g: EnrichedGraph) -> Optional[frozenset]:
    for c in independent_loopless_sets(g):
        if verify_stable_cut(g, c):
            return frozenset(c)
    return None


def _finish(g, out, reduced_cut) -> Optional[frozenset]:
    if reduced_cut is None:
        return None
    return lift_reduced_cut(g, out, reduced_cut)


def solve_h1_rnet(g: EnrichedGraph, r: int, trust_class: bool = False) -> Optional[frozenset]:
    """Stable cut on graphs with no H1 and no ``r`` disjoint nets."""
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}")
    if not trust_class and r <= 3:
        _require_free(g, [("H1", H1()), (f"{r}*N1_1_1", Disjoint(r, Net(1, 1, 1)))])
    out = reduce_h_obs(g, check=False)
    if isinstance(out, EarlyYes):
        return out.witness
    if isinstance(out, EarlyNo):
        return None
    h = out.graph
    loopless = h.n - len(h.loops)
    if loopless > 12 * r - 1:
        raise InvariantError(f"{loopless} loopless vertices survive; the class allows at most {12 * r - 1}")
    return _finish(g, out, _search(h))


def solve_h1_n11l(g: EnrichedGraph, l: int, trust_class: bool = False) -> Optional[frozenset]:
    """Stable cut on graphs with no H1 and no ``N_{1,1,l}``.

    With a path of length ``2l`` present the reduced graph keeps at most
    ``6l`` loopless vertices.  Without one (and always for ``l = 0``) the
    generic exact search is used, capped at ``FALLBACK_LIMIT`` vertices.
    """
    if l < 0:
        raise InputError(f"l must be >= 0, got {l}")
    if not trust_class and l <= 3:
        _require_free(g, [("H1", H1()), (f"N1_1_{l}", Net(1, 1, l))])
    out = reduce_h_obs(g, check=False)
    if isinstance(out, EarlyYes):
        return out.witness
    if isinstance(out, EarlyNo):
        return None
    h = out.graph
    if l >= 1 and contains_subgraph(h, build_pattern(Path(2 * l + 1))) is not None:
        loopless = h.n - len(h.loops)
        if loopless > 6 * l:
            raise InvariantError(f"{loopless} loopless vertices beside a long path; the class allows at most {6 * l}")
        return _finish(g, out, _search(h))
    if h.n > FALLBACK_LIMIT:
        raise InputError(f"reduced graph has {h.n} vertices; the fallback search stops at {FALLBACK_LIMIT}")
    return _finish(g, out, _search(h))


def solve_h2221_c3(g: EnrichedGraph, k: int = 10, trust_class: bool = False) -> Optional[frozenset]:
    """Stable cut on triangle-free graphs without ``H1^{2,2,2,1}``.

    After preprocessing the loopless vertices form an independent set, so
    the instance is a yes-instance exactly when that whole set is a cut.
    """
    if not trust_class:
        _require_free(g, [("H1p2_2_2_1", H1Pendant(2, 2, 2, 1)), ("C3", Cycle(3))])
    out = reduce_small_cut(g, k)
    if isinstance(out, EarlyYes):
        return out.witness
    if isinstance(out, EarlyNo):
        return None
    h = out.graph
    s = [v for v in h.vertices() if v not in h.loops]
    if not is_independent(h, s):
        raise InvariantError("loopless vertices of the reduced graph are not independent")
    if s and verify_stable_cut(h, s):
        return _finish(g, out, s)
    return None


def reduced_loopless(g: EnrichedGraph, k: int = 10):
    """Loopless vertex set after the preprocessing used by
    :func:`solve_h2221_c3` (``None`` on an early verdict)."""
    out = reduce_small_cut(g, k)
    if isinstance(out, (EarlyYes, EarlyNo)):
        return None
    return [v for v in out.graph.vertices() if v not in out.graph.loops], out.graph
