"""Command-line front end: ``enrichedcut <command> ...``.

Exit codes: 0 yes / pass, 1 no, 2 unknown, 64 bad input, 70 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import cuts, formats, fuzz, gadgets, kernel, nae, pattern, poly
from .builders import pattern as named
from .classify import NPC, P, classify, parse_problem
from .errors import InputError, InvariantError

EXIT_YES, EXIT_NO, EXIT_UNKNOWN, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 64, 70
MAX_K = 6


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _ids(vs) -> str:
    return " ".join(map(str, sorted(vs)))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


# -- solve -------------------------------------------------------------------


def _parse_class(text: str):
    name, _, arg = text.partition(":")
    if name == "h2221-c3" and not arg:
        return name, None
    if name in ("h1-rnet", "h1-n11l") and arg.isdigit():
        return name, int(arg)
    raise InputError(f"bad --class {text!r}; use h1-rnet:r, h1-n11l:l or h2221-c3")


def cmd_solve(args) -> int:
    text = _read(args.file)
    if args.problem == "nae01":
        f = formats.parse_nae(text)
        a = nae.solve_nae01(f)
        cert = None if a is None else "assignment: " + " ".join("1" if x else "0" for x in a)
        _emit(args, {"answer": "yes" if a else "no", "assignment": a}, "yes\n" + cert if a else "no")
        return EXIT_YES if a else EXIT_NO
    g = formats.parse_graph(text)
    if args.problem in ("matching-cut", "d-cut"):
        if args.problem == "d-cut" and args.d is None:
            raise InputError("d-cut needs --d")
        p = cuts.solve_matching_cut(g) if args.problem == "matching-cut" else cuts.solve_d_cut(g, args.d)
        if p is None:
            _emit(args, {"answer": "no"}, "no")
            return EXIT_NO
        _emit(args, {"answer": "yes", "A": sorted(p.a), "B": sorted(p.b)}, f"yes\nA: {_ids(p.a)}\nB: {_ids(p.b)}")
        return EXIT_YES
    if args.cls is None:
        c = cuts.solve_stable_cut(g)
    else:
        name, arg = _parse_class(args.cls)
        if name == "h1-rnet":
            c = poly.solve_h1_rnet(g, arg, trust_class=args.trust_class)
        elif name == "h1-n11l":
            c = poly.solve_h1_n11l(g, arg, trust_class=args.trust_class)
        else:
            c = poly.solve_h2221_c3(g, args.k, trust_class=args.trust_class)
    if c is None:
        _emit(args, {"answer": "no"}, "no")
        return EXIT_NO
    _emit(args, {"answer": "yes", "cut": sorted(c)}, f"yes\ncut: {_ids(c)}")
    return EXIT_YES


# -- generate ----------------------------------------------------------------


def cmd_generate(args) -> int:
    f = formats.parse_nae(_read(args.formula))
    if args.target == "mmc":
        gi = gadgets.nae01_to_mmc(f, args.k)
    elif args.target == "dcut":
        gi = gadgets.mmc_to_dcut(gadgets.nae01_to_mmc(f, args.k), args.d)
    elif args.target == "prsc-triangle":
        gi = gadgets.nae01_to_prsc_triangle(f, args.l if args.l is not None else 4, args.kmax, args.q)
    else:
        gi = gadgets.nae01_to_prsc_cycle(f, args.l if args.l is not None else 3, args.kmax)
    graph_text = formats.render_graph(gi.graph)
    anchors = formats.render_anchors(gi.variable_anchor, gi.clause_anchor, gi.params)
    if args.output:
        out = Path(args.output)
        out.write_text(graph_text)
        Path(args.anchors or str(out) + ".anchors").write_text(anchors)
        print(f"wrote {out} ({gi.graph.n} vertices)")
    else:
        sys.stdout.write(graph_text)
        if args.anchors:
            Path(args.anchors).write_text(anchors)
    return EXIT_YES


# -- reduce ------------------------------------------------------------------


def cmd_reduce(args) -> int:
    g = formats.parse_graph(_read(args.file))
    if args.engine == "gen-obs":
        out = kernel.reduce_gen_obs(g)
    elif args.engine == "h-obs":
        out = kernel.reduce_h_obs(g)
    else:
        if args.k > MAX_K and not args.allow_large_k:
            raise InputError(f"k = {args.k} exceeds the cap of {MAX_K}; pass --allow-large-k")
        out = kernel.reduce_small_cut(g, args.k)
    trace = kernel.render_trace(out.trace)
    if isinstance(out, kernel.EarlyYes):
        payload = {"result": "yes", "cut": sorted(out.witness)}
        text = f"{trace}yes\ncut: {_ids(out.witness)}"
        code = EXIT_YES
    elif isinstance(out, kernel.EarlyNo):
        payload = {"result": "no", "reason": out.reason}
        text = f"{trace}no ({out.reason})"
        code = EXIT_NO
    else:
        payload = {"result": "reduced", "graph": formats.render_graph(out.graph), "vertex_map": list(out.vertex_map)}
        text = f"{trace}reduced\n{formats.render_graph(out.graph)}"
        code = EXIT_UNKNOWN
    payload["trace"] = [a.render() for a in out.trace]
    _emit(args, payload, text)
    return code


# -- classify and check ------------------------------------------------------


def _patterns(text: str):
    return [named(t) for t in text.split(",") if t.strip()]


def cmd_classify(args) -> int:
    v = classify(parse_problem(args.problem), _patterns(args.forbid))
    payload = {"tag": v.tag, "citation": v.citation, "derivation": list(v.derivation), "neighbours": list(v.neighbours)}
    lines = [v.tag] + ([v.citation] if v.citation else []) + list(v.derivation)
    lines += [f"nearby: {n}" for n in v.neighbours]
    _emit(args, payload, "\n".join(lines))
    return {P: EXIT_YES, NPC: EXIT_NO}.get(v.tag, EXIT_UNKNOWN)


def cmd_check(args) -> int:
    if args.query == "free":
        g = formats.parse_graph(_read(args.target))
        hits = [h for h in args.forbid.split(",") if h.strip() and not pattern.is_free(g, [named(h)])]
        ok = not hits
        _emit(args, {"free": ok, "contains": hits}, "free" if ok else "contains " + ", ".join(hits))
    elif args.query == "class-s":
        ok = pattern.in_class_S(named(args.target))
        _emit(args, {"class_s": ok}, "in class S" if ok else "not in class S")
    else:
        pc = pattern.pendant_class(named(args.target))
        kind = type(pc).__name__
        legs = list(getattr(pc, "legs", ()))
        ok = kind != "Neither"
        _emit(args, {"class": kind, "legs": legs}, f"{kind} {' '.join(map(str, legs))}".strip())
    return EXIT_YES if ok else EXIT_NO


# -- fuzz --------------------------------------------------------------------


def cmd_fuzz(args) -> int:
    if args.replay:
        ce = fuzz.replay(args.replay)
        if ce is None:
            _emit(args, {"replay": "pass"}, "pass")
            return EXIT_YES
        _emit(args, {"replay": "fail", **ce.as_dict()}, f"fail\nexpected: {ce.expected}\nactual: {ce.actual}")
        return EXIT_NO
    suites = tuple(s.strip() for s in args.suites.split(",")) if args.suites else fuzz.SUITES
    cfg = fuzz.FuzzConfig(
        seed=args.seed,
        max_vertices=args.max_vertices,
        max_multiplicity=args.max_multiplicity,
        loop_probability=args.loop_probability,
        trials=args.trials,
        suites=suites,
    )
    report = fuzz.fuzz_equivalence(cfg)
    if args.save_dir:
        d = Path(args.save_dir)
        d.mkdir(parents=True, exist_ok=True)
        for suite, ce in report.counterexamples.items():
            (d / f"{suite}-{ce.check}-t{ce.trial}.txt").write_text(ce.replay_text())
    if args.json:
        print(report.to_json(timings=not args.no_timings))
    else:
        for suite, c in report.counts.items():
            status = "FAIL" if c["fail"] else "ok"
            print(f"{suite:<11} {status:<4} pass={c['pass']} fail={c['fail']} skip={c['skip']} ({report.seconds[suite]}s)")
            ce = report.counterexamples.get(suite)
            if ce:
                print(f"  first failure: {ce.check} trial {ce.trial}: expected {ce.expected}, got {ce.actual}")
    return EXIT_NO if report.failed else EXIT_YES


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="enrichedcut", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = common(sub.add_parser("solve", help="decide a cut problem on a PRG file (or NAE file for nae01)"))
    p.add_argument("problem", choices=["matching-cut", "d-cut", "stable-cut", "nae01"])
    p.add_argument("file", help="input path, or - for stdin")
    p.add_argument("--d", type=int)
    p.add_argument("--class", dest="cls", help="h1-rnet:r, h1-n11l:l or h2221-c3")
    p.add_argument("--trust-class", action="store_true", help="skip the class-membership check")
    p.add_argument("--k", type=int, default=10, help="small-cut size for h2221-c3 (default 10)")
    p.set_defaults(run=cmd_solve)

    p = common(sub.add_parser("generate", help="build a hardness instance from an NAE formula"))
    p.add_argument("target", choices=["mmc", "dcut", "prsc-triangle", "prsc-cycle"])
    p.add_argument("formula")
    p.add_argument("-o", "--output")
    p.add_argument("--anchors", help="anchor file path (default <output>.anchors)")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--l", type=int)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--q", type=int)
    p.set_defaults(run=cmd_generate)

    p = common(sub.add_parser("reduce", help="run a preprocessing engine and print its trace"))
    p.add_argument("engine", choices=["gen-obs", "h-obs", "small-cut"])
    p.add_argument("file")
    p.add_argument("--k", type=int, default=MAX_K)
    p.add_argument("--allow-large-k", action="store_true")
    p.set_defaults(run=cmd_reduce)

    p = common(sub.add_parser("classify", help="complexity verdict for a forbidden set"))
    p.add_argument("--problem", required=True, help="mmc, dcut:<d> or prsc")
    p.add_argument("--forbid", required=True, help="comma-separated pattern specs")
    p.set_defaults(run=cmd_classify)

    p = common(sub.add_parser("check", help="structural queries"))
    p.add_argument("query", choices=["free", "class-s", "pendant"])
    p.add_argument("target", help="PRG file for 'free', a pattern spec otherwise")
    p.add_argument("--forbid", default="", help="patterns for 'free'")
    p.set_defaults(run=cmd_check)

    p = common(sub.add_parser("fuzz", help="seeded equivalence fuzzing against the oracles"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-vertices", type=int, default=7)
    p.add_argument("--max-multiplicity", type=int, default=3)
    p.add_argument("--loop-probability", default="3/10")
    p.add_argument("--suites", help="comma-separated subset of " + ",".join(fuzz.SUITES))
    p.add_argument("--save-dir", help="write counterexamples here as replay files")
    p.add_argument("--replay", help="re-run a saved counterexample")
    p.add_argument("--no-timings", action="store_true", help="omit wall-clock fields from --json")
    p.set_defaults(run=cmd_fuzz)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_YES
    try:
        if getattr(args, "loop_probability", None) is not None:
            try:
                args.loop_probability = Fraction(args.loop_probability)
            except (ValueError, ZeroDivisionError):
                raise InputError(f"bad probability {args.loop_probability!r}") from None
        if args.command == "generate" and args.kmax is None:
            args.kmax = 1 if args.target == "prsc-triangle" else 2
        return args.run(args)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
