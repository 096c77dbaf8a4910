"""Seeded equivalence fuzzing against the brute-force oracles.

Every check is a plain function of one instance returning ``(expected,
actual)``, or ``None`` when the instance is outside the check's scope.
Checks look their subjects up through module attributes at call time, so
monkeypatching e.g. ``enrichedcut.gadgets.mmc_to_dcut`` is visible here.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional, Union

from . import cuts, formats, gadgets, graph, kernel, nae, pattern, poly
from .builders import pattern as named
from .errors import InputError, InvariantError, PreconditionError
from .graph import EnrichedGraph
from .nae import NaeFormula

SUITES = ("reductions", "kernels", "poly", "bridges")


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    max_vertices: int = 7
    max_multiplicity: int = 3
    loop_probability: Fraction = Fraction(3, 10)
    trials: int = 200
    suites: tuple[str, ...] = SUITES

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_multiplicity < 1 or self.trials < 0:
            raise InputError("fuzz bounds must be positive")
        p = self.loop_probability
        p = Fraction(str(p)) if isinstance(p, float) else Fraction(p)
        if not 0 <= p <= 1:
            raise InputError("loop probability must lie in [0, 1]")
        object.__setattr__(self, "loop_probability", p)
        bad = set(self.suites) - set(SUITES)
        if bad:
            raise InputError(f"unknown suites {sorted(bad)}")


@dataclass(frozen=True)
class Counterexample:
    suite: str
    check: str
    trial: int
    seed: int
    expected: object
    actual: object
    instance: str

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "check": self.check,
            "trial": self.trial,
            "seed": self.seed,
            "expected": self.expected,
            "actual": self.actual,
            "instance": self.instance,
        }

    def replay_text(self) -> str:
        return f"# check {self.check}\n# seed {self.seed} trial {self.trial}\n{self.instance}"


@dataclass
class FuzzReport:
    counts: dict = field(default_factory=dict)
    counterexamples: dict = field(default_factory=dict)
    seconds: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return any(c["fail"] for c in self.counts.values())

    def as_dict(self, timings: bool = True) -> dict:
        out = {
            "counts": self.counts,
            "counterexamples": {k: v.as_dict() for k, v in sorted(self.counterexamples.items())},
        }
        if timings:
            out["seconds"] = self.seconds
        return out

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.as_dict(timings), indent=2, sort_keys=True, default=str)


# -- instance generators ------------------------------------------------------


def random_enriched_graph(cfg: FuzzConfig, rng: random.Random) -> EnrichedGraph:
    n = rng.randint(1, cfg.max_vertices)
    density = rng.choice((0.2, 0.35, 0.5, 0.7))
    p = cfg.loop_probability
    loops = [v for v in range(n) if rng.random() * p.denominator < p.numerator]
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                edges[(u, v)] = rng.randint(1, cfg.max_multiplicity)
    return EnrichedGraph(n, loops, edges)


def random_nae01(rng: random.Random, max_vars: int = 4, max_clauses: int = 3) -> NaeFormula:
    nvars = rng.randint(3, max(3, max_vars))
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        vs = rng.sample(range(1, nvars + 1), 3)
        negs = rng.choice((1, 2))
        clauses.append(tuple(-v if i < negs else v for i, v in enumerate(vs)))
    return NaeFormula(nvars, tuple(clauses))


def _loopless(g: EnrichedGraph) -> EnrichedGraph:
    return EnrichedGraph(g.n, (), g.edges)


def _simple(g: EnrichedGraph) -> EnrichedGraph:
    return graph.underlying_simple(g)


# -- checks ------------------------------------------------------------------


def _mc(g):
    return cuts.solve_matching_cut(g) is not None


def _sc(g):
    return cuts.solve_stable_cut(g) is not None


def check_mc_to_nae01(g):
    f = nae.mc_to_nae01(g)
    if not nae.is_nae01_instance(f):
        return True, "formula is not NAE 0-1"
    cut = cuts.solve_matching_cut(g)
    if cut is not None and not nae.eval_nae(f, nae.assignment_from_bipartition(max(g.n, 1), cut.a)):
        return True, "cut-derived assignment fails"
    return cut is not None, nae.solve_nae01(f) is not None


def _bridge(g, transform):
    lg = transform(g)
    if lg.n > 16:
        return None
    sc, mc = _sc(lg), _mc(g)
    heavy = all(sum(g.multiplicity(v, u) for u in g.neighbors(v)) >= 2 for v in g.vertices())
    ok = (not sc or mc) and (not (mc and heavy) or sc)
    return "holds", "holds" if ok else f"violated (stable={sc}, matching={mc}, heavy={heavy})"


def check_line_graph(g):
    return _bridge(g, graph.line_graph)


def check_star_line_graph(g):
    return _bridge(g, graph.star_line_graph)


def check_multiedge_to_triangle(g):
    return _mc(g), _mc(graph.multiedge_to_triangle(g))


def check_multiedge_to_clique_d1(g):
    return _mc(g), cuts.solve_d_cut(graph.multiedge_to_clique(g, 1), 1) is not None


def _forcing(g, d):
    if g.n > 5:
        return None
    h = graph.multiedge_to_forcing_cliques(g, d)
    return cuts.solve_d_cut(g, d) is not None, cuts.solve_d_cut(h, d) is not None


def check_forcing_cliques_d2(g):
    return _forcing(g, 2)


def check_forcing_cliques_d3(g):
    return _forcing(g, 3)


def _third(f):
    return nae.solve_nae01(f) is not None


def check_nae01_to_mmc(f):
    gi = gadgets.nae01_to_mmc(f, 1)
    if not pattern.is_subcubic(gi.graph):
        return _third(f), "not subcubic"
    return _third(f), _mc(gi.graph)


def check_mmc_to_dcut(f):
    out = []
    for d in (2, 3):
        gi = gadgets.mmc_to_dcut(gadgets.nae01_to_mmc(f, 1), d)
        out.append(cuts.solve_d_cut(gi.graph, d) is not None)
    return [_third(f)] * 2, out


def check_prsc_triangle(f):
    return _third(f), _sc(gadgets.nae01_to_prsc_triangle(f, 4, 1).graph)


def check_prsc_cycle(f):
    return _third(f), _sc(gadgets.nae01_to_prsc_cycle(f, 3, 2).graph)


def _kernel_check(g, out, audit) -> str:
    truth = _sc(g)
    if isinstance(out, kernel.EarlyYes):
        if not cuts.verify_stable_cut(g, out.witness):
            return "witness fails"
        return "yes" if truth else "yes (oracle says no)"
    if isinstance(out, kernel.EarlyNo):
        return "no" if not truth else "no (oracle says yes)"
    replayed, _ = kernel.apply_trace(g, out.trace)
    if replayed != out.graph:
        return "trace replay differs"
    if out.graph.n > g.n:
        return "graph grew"
    problems = audit(out.graph)
    if problems:
        return "audit: " + problems[0]
    cut = cuts.solve_stable_cut(out.graph)
    if cut is not None:
        lifted = kernel.lift_reduced_cut(g, out, cut)
        if not cuts.verify_stable_cut(g, lifted):
            return "lifted witness fails"
    return ("yes" if cut is not None else "no") + ("" if (cut is not None) == truth else " (oracle disagrees)")


def _truth_word(g):
    return "yes" if _sc(g) else "no"


def check_gen_obs(g):
    return _truth_word(g), _kernel_check(g, kernel.reduce_gen_obs(g), kernel.audit_gen_obs)


def check_h_obs(g):
    if not pattern.is_free(g, [named("H1")]):
        return None

    def audit(h):
        return kernel.audit_gen_obs(h) + kernel.audit_h_obs(h)

    return _truth_word(g), _kernel_check(g, kernel.reduce_h_obs(g), audit)


def check_small_cut(g):
    results = []
    for k in (3, 4):
        out = kernel.reduce_small_cut(g, k)
        results.append(_kernel_check(g, out, lambda h: kernel.audit_small_cut(h, k)))
    return [_truth_word(g)] * 2, results


def _poly(g, solver, members):
    if not pattern.is_free(g, [named(m) for m in members]):
        return None
    try:
        got = solver(g)
    except InvariantError as exc:
        return _sc(g), f"invariant: {exc}"
    if got is not None and not cuts.verify_stable_cut(g, got):
        return True, "witness fails"
    return _sc(g), got is not None


def check_h1_rnet(g):
    return _poly(g, lambda h: poly.solve_h1_rnet(h, 1, trust_class=True), ["H1", "N1_1_1"])


def check_h1_n11l(g):
    return _poly(g, lambda h: poly.solve_h1_n11l(h, 2, trust_class=True), ["H1", "N1_1_2"])


def check_h2221_c3(g):
    return _poly(g, lambda h: poly.solve_h2221_c3(h, 6, trust_class=True), ["H1p2_2_2_1", "C3"])


Instance = Union[EnrichedGraph, NaeFormula]


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    kind: str  # "multigraph", "simple", "enriched" or "formula"
    run: Callable[[Instance], Optional[tuple]]


def _checks() -> list[Check]:
    # looked up at call time so that monkeypatched checks take effect
    g = globals()
    table = [
        ("mc_to_nae01", "bridges", "simple"),
        ("line_graph", "bridges", "multigraph"),
        ("star_line_graph", "bridges", "multigraph"),
        ("multiedge_to_triangle", "reductions", "multigraph"),
        ("multiedge_to_clique_d1", "reductions", "multigraph"),
        ("forcing_cliques_d2", "reductions", "multigraph"),
        ("forcing_cliques_d3", "reductions", "multigraph"),
        ("nae01_to_mmc", "reductions", "formula"),
        ("mmc_to_dcut", "reductions", "formula"),
        ("prsc_triangle", "reductions", "formula"),
        ("prsc_cycle", "reductions", "formula"),
        ("gen_obs", "kernels", "enriched"),
        ("h_obs", "kernels", "enriched"),
        ("small_cut", "kernels", "enriched"),
        ("h1_rnet", "poly", "enriched"),
        ("h1_n11l", "poly", "enriched"),
        ("h2221_c3", "poly", "enriched"),
    ]
    return [Check(n, s, k, g["check_" + n]) for n, s, k in table]


def _instance(kind: str, cfg: FuzzConfig, rng: random.Random) -> Instance:
    if kind == "formula":
        return random_nae01(rng)
    g = random_enriched_graph(cfg, rng)
    if kind == "multigraph":
        return _loopless(g)
    if kind == "simple":
        return _simple(g)
    return g


def _serialize(inst: Instance) -> str:
    if isinstance(inst, NaeFormula):
        return formats.render_nae(inst)
    return formats.render_graph(inst)


def fuzz_equivalence(cfg: FuzzConfig) -> FuzzReport:
    report = FuzzReport()
    checks = _checks()
    for suite in SUITES:
        if suite not in cfg.suites:
            continue
        start = time.perf_counter()
        counts = {"pass": 0, "fail": 0, "skip": 0}
        for trial in range(cfg.trials):
            rng = random.Random(f"{cfg.seed}/{suite}/{trial}")
            for chk in checks:
                if chk.suite != suite:
                    continue
                inst = _instance(chk.kind, cfg, rng)
                res = _run(chk, inst)
                if res is None:
                    counts["skip"] += 1
                    continue
                expected, actual = res
                if expected == actual:
                    counts["pass"] += 1
                    continue
                counts["fail"] += 1
                report.counterexamples.setdefault(
                    suite,
                    Counterexample(suite, chk.name, trial, cfg.seed, expected, actual, _serialize(inst)),
                )
        report.counts[suite] = counts
        report.seconds[suite] = round(time.perf_counter() - start, 3)
    return report


def _run(chk: Check, inst: Instance):
    try:
        return chk.run(inst)
    except (InvariantError, PreconditionError, InputError) as exc:
        return "no error", f"{type(exc).__name__}: {exc}"


def replay(path: Union[str, Path]) -> Optional[Counterexample]:
    """Re-run a saved counterexample; ``None`` means it now passes."""
    text = Path(path).read_text()
    header = [ln.split() for ln in text.splitlines() if ln.startswith("#")]
    name = next((h[2] for h in header if len(h) >= 3 and h[1] == "check"), None)
    if name is None:
        raise InputError("replay file lacks a '# check <name>' line")
    seed = trial = 0
    for h in header:
        if len(h) >= 5 and h[1] == "seed":
            seed, trial = int(h[2]), int(h[4])
    chk = next((c for c in _checks() if c.name == name), None)
    if chk is None:
        raise InputError(f"unknown check {name!r}")
    body = "\n".join(ln for ln in text.splitlines() if not ln.startswith("#"))
    inst = formats.parse_nae(body) if chk.kind == "formula" else formats.parse_graph(body)
    res = _run(chk, inst)
    if res is None or res[0] == res[1]:
        return None
    return Counterexample(chk.suite, name, trial, seed, res[0], res[1], _serialize(inst))
