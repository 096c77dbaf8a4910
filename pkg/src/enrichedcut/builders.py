"""Named pattern families and their canonical vertex numbering.

Numbering (core vertices first, then legs / subdivision vertices in leg
order):

* ``Path(n)``: ``0 - 1 - ... - n-1``.
* ``Cycle(n)``: ``0 - 1 - ... - n-1 - 0``.
* ``Star(s)``: centre ``0``, leaves ``1..s``.
* ``Net(i, j, k)``: triangle ``0, 1, 2``; then the leg of ``0`` (``i``
  vertices, walking away from the triangle), the leg of ``1``, the leg of ``2``.
* ``H1Pendant(a, b, c, d)``: centres ``0 - 1``; legs ``a``, ``b`` hang off ``0``
  and ``c``, ``d`` off ``1``, listed in that order.  ``H1()`` is
  ``H1Pendant(1, 1, 1, 1)``: leaves ``2, 3`` on ``0`` and ``4, 5`` on ``1``.
* ``HMiddle(i)``: ``H1`` with the centre edge replaced by a path of length
  ``i``; the ``i - 1`` middle vertices are ``6, 7, ...`` from ``0`` to ``1``.
* ``Complete(n)``: every pair of ``0..n-1``.
* ``Disjoint(r, spec)``: ``r`` copies of ``spec`` numbered block by block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path as FilePath
from typing import Union

from .errors import InputError
from .graph import EnrichedGraph, SimplePattern, disjoint_union, simple_graph


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Star:
    s: int


@dataclass(frozen=True)
class Net:
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class H1:
    pass


@dataclass(frozen=True)
class HMiddle:
    i: int


@dataclass(frozen=True)
class H1Pendant:
    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Disjoint:
    r: int
    part: "PatternSpec"


@dataclass(frozen=True)
class Explicit:
    graph: EnrichedGraph


PatternSpec = Union[Path, Cycle, Star, Net, H1, HMiddle, H1Pendant, Complete, Disjoint, Explicit]


def _legs(n0, edges, anchors_and_lengths):
    n = n0
    for anchor, length in anchors_and_lengths:
        prev = anchor
        for _ in range(length):
            edges.append((prev, n))
            prev = n
            n += 1
    return n


def build_pattern(spec: PatternSpec) -> SimplePattern:
    if isinstance(spec, Path):
        if spec.n < 1:
            raise InputError("Path needs n >= 1")
        return simple_graph(spec.n, [(i, i + 1) for i in range(spec.n - 1)])
    if isinstance(spec, Cycle):
        if spec.n < 3:
            raise InputError("Cycle needs n >= 3")
        return simple_graph(spec.n, [(i, (i + 1) % spec.n) for i in range(spec.n)])
    if isinstance(spec, Star):
        if spec.s < 1:
            raise InputError("Star needs s >= 1")
        return simple_graph(spec.s + 1, [(0, i) for i in range(1, spec.s + 1)])
    if isinstance(spec, Net):
        if min(spec.i, spec.j, spec.k) < 0:
            raise InputError("Net legs must be >= 0")
        edges = [(0, 1), (1, 2), (0, 2)]
        n = _legs(3, edges, [(0, spec.i), (1, spec.j), (2, spec.k)])
        return simple_graph(n, edges)
    if isinstance(spec, H1):
        return build_pattern(H1Pendant(1, 1, 1, 1))
    if isinstance(spec, H1Pendant):
        legs = (spec.a, spec.b, spec.c, spec.d)
        if min(legs) < 1:
            raise InputError("H1Pendant legs must be >= 1")
        edges = [(0, 1)]
        # first vertex of every leg comes before the rest so that
        # H1Pendant(1, 1, 1, 1) numbers exactly like H1
        firsts = []
        n = 2
        for anchor in (0, 0, 1, 1):
            edges.append((anchor, n))
            firsts.append(n)
            n += 1
        n = _legs(n, edges, [(f, L - 1) for f, L in zip(firsts, legs)])
        return simple_graph(n, edges)
    if isinstance(spec, HMiddle):
        if spec.i < 1:
            raise InputError("HMiddle needs i >= 1")
        edges = [(0, 2), (0, 3), (1, 4), (1, 5)]
        chain = [0] + list(range(6, 6 + spec.i - 1)) + [1]
        edges += list(zip(chain, chain[1:]))
        return simple_graph(6 + spec.i - 1, edges)
    if isinstance(spec, Disjoint):
        if spec.r < 1:
            raise InputError("Disjoint needs r >= 1")
        part = build_pattern(spec.part)
        return disjoint_union(*([part] * spec.r))
    if isinstance(spec, Complete):
        if spec.n < 1:
            raise InputError("Complete needs n >= 1")
        return simple_graph(spec.n, [(a, b) for a in range(spec.n) for b in range(a + 1, spec.n)])
    if isinstance(spec, Explicit):
        if not spec.graph.is_simple():
            raise InputError("explicit pattern must be simple")
        return spec.graph
    raise InputError(f"unknown pattern spec {spec!r}")


_SPEC_RE = [
    (re.compile(r"P(\d+)$"), lambda m: Path(int(m[1]))),
    (re.compile(r"C(\d+)$"), lambda m: Cycle(int(m[1]))),
    (re.compile(r"K1_(\d+)$"), lambda m: Star(int(m[1]))),
    (re.compile(r"K(\d+)$"), lambda m: Complete(int(m[1]))),
    (re.compile(r"N(\d+)_(\d+)_(\d+)$"), lambda m: Net(int(m[1]), int(m[2]), int(m[3]))),
    (re.compile(r"H1p(\d+)_(\d+)_(\d+)_(\d+)$"), lambda m: H1Pendant(*map(int, m.groups()))),
    (re.compile(r"H(\d+)$"), lambda m: HMiddle(int(m[1]))),
]


def parse_pattern_spec(text: str) -> PatternSpec:
    """Parse compact names: ``P7``, ``C5``, ``K1_4``, ``K4``, ``N1_1_1``, ``H1``,
    ``H2``, ``H1p2_2_2_1``, ``3*N1_1_1`` or ``@file.prg``."""
    text = text.strip()
    if text.startswith("@"):
        from .formats import parse_graph

        return Explicit(parse_graph(FilePath(text[1:]).read_text()))
    m = re.match(r"(\d+)\*(.+)$", text)
    if m:
        return Disjoint(int(m[1]), parse_pattern_spec(m[2]))
    for rx, make in _SPEC_RE:
        m = rx.match(text)
        if m:
            return make(m)
    raise InputError(f"unrecognised pattern spec {text!r}")


def pattern(text_or_spec) -> SimplePattern:
    """Shorthand: build from a compact string or a spec object."""
    if isinstance(text_or_spec, str):
        text_or_spec = parse_pattern_spec(text_or_spec)
    return build_pattern(text_or_spec)
