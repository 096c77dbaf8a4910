"""Text formats: PRG v1 graphs, NAE v1 formulas and anchors v1 sidecars."""

from __future__ import annotations

from typing import Iterator

from .errors import ParseError
from .graph import EnrichedGraph
from .nae import NaeFormula


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", no) from None


def parse_graph(text: str) -> EnrichedGraph:
    lines = _lines(text)
    try:
        no, head = next(lines)
    except StopIteration:
        raise ParseError("empty input; expected 'prg <n>'", 1) from None
    if len(head) != 2 or head[0] != "prg":
        raise ParseError("header must be 'prg <n>'", no)
    n = _int(head[1], no)
    if n < 0:
        raise ParseError("vertex count must be >= 0", no)
    loops: set[int] = set()
    edges: dict[tuple[int, int], int] = {}
    for no, toks in lines:
        kind = toks[0]
        if kind == "loop" and len(toks) == 2:
            v = _int(toks[1], no)
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range", no)
            if v in loops:
                raise ParseError(f"duplicate loop on {v}", no)
            loops.add(v)
        elif kind == "edge" and len(toks) == 4:
            u, v, m = (_int(t, no) for t in toks[1:])
            if not 0 <= u < v < n:
                raise ParseError(f"edge ({u}, {v}) needs 0 <= u < v < {n}", no)
            if m < 1:
                raise ParseError("multiplicity must be >= 1", no)
            if (u, v) in edges:
                raise ParseError(f"duplicate edge ({u}, {v})", no)
            edges[(u, v)] = m
        else:
            raise ParseError(f"unrecognised line {' '.join(toks)!r}", no)
    return EnrichedGraph(n, loops, edges)


def render_graph(g: EnrichedGraph) -> str:
    out = [f"prg {g.n}"]
    out += [f"loop {v}" for v in sorted(g.loops)]
    out += [f"edge {u} {v} {m}" for (u, v), m in sorted(g.edges.items())]
    return "\n".join(out) + "\n"


def parse_nae(text: str) -> NaeFormula:
    lines = _lines(text)
    try:
        no, head = next(lines)
    except StopIteration:
        raise ParseError("empty input; expected 'nae <nvars> <nclauses>'", 1) from None
    if len(head) != 3 or head[0] != "nae":
        raise ParseError("header must be 'nae <nvars> <nclauses>'", no)
    nvars, ncl = _int(head[1], no), _int(head[2], no)
    clauses = []
    for no, toks in lines:
        if len(toks) != 3:
            raise ParseError("a clause is exactly three literals", no)
        lits = tuple(_int(t, no) for t in toks)
        if any(x == 0 or abs(x) > nvars for x in lits):
            raise ParseError(f"literal out of range in {lits}", no)
        clauses.append(lits)
    if len(clauses) != ncl:
        raise ParseError(f"header promises {ncl} clauses, found {len(clauses)}", no)
    if nvars < 1:
        raise ParseError("need at least one variable", 1)
    return NaeFormula(nvars, tuple(clauses))


def render_nae(f: NaeFormula) -> str:
    out = [f"nae {f.nvars} {len(f.clauses)}"]
    out += [" ".join(map(str, c)) for c in f.clauses]
    return "\n".join(out) + "\n"


def render_anchors(variable_anchor: dict, clause_anchor: dict, params: dict) -> str:
    out = []
    for i in sorted(variable_anchor):
        out.append(" ".join(["var", str(i), *map(str, variable_anchor[i])]))
    for j in sorted(clause_anchor):
        out.append(" ".join(["clause", str(j), *map(str, clause_anchor[j])]))
    for name in sorted(params):
        out.append(f"param {name} {params[name]}")
    return "\n".join(out) + "\n"


def parse_anchors(text: str) -> tuple[dict, dict, dict]:
    var, clause, params = {}, {}, {}
    for no, toks in _lines(text):
        if toks[0] in ("var", "clause") and len(toks) >= 2:
            target = var if toks[0] == "var" else clause
            target[_int(toks[1], no)] = [_int(t, no) for t in toks[2:]]
        elif toks[0] == "param" and len(toks) == 3:
            params[toks[1]] = _int(toks[2], no)
        else:
            raise ParseError(f"unrecognised line {' '.join(toks)!r}", no)
    return var, clause, params
