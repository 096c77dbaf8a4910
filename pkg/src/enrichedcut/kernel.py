"""Preprocessing engines for partially reflexive stable cut.

Each engine returns an :class:`EarlyYes`, :class:`EarlyNo` or
:class:`Reduced` outcome together with a trace of rule applications.  The
engines never renumber while they work: trace vertex ids are ids of the
input graph, and the reduced graph is compacted at the very end
(``vertex_map[new] = old``).

The only operations are deleting vertices and adding loops, so every
intermediate graph is fixed by its (alive set, loop set).  That is what
makes witness lifting cheap: a stable cut of the reduced graph is pulled
back step by step, repairing it inside the handful of vertices each step
touched.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Union

from .builders import H1
from .builders import build_pattern
from .cuts import independent_loopless_sets
from .errors import InputError, InvariantError, PreconditionError
from .graph import EnrichedGraph
from .pattern import contains_subgraph

DELETE, ADD_LOOP, REPORT = "delete", "add-loop", "report"


@dataclass(frozen=True)
class RuleApplication:
    rule: str
    vertices: tuple[int, ...]
    action: str
    step: int

    def render(self) -> str:
        ids = " ".join(map(str, self.vertices))
        return f"rule {self.rule} vertices {ids} action {self.action}"


@dataclass(frozen=True)
class EarlyYes:
    witness: frozenset
    trace: tuple[RuleApplication, ...] = ()

    verdict = True


@dataclass(frozen=True)
class EarlyNo:
    reason: str
    trace: tuple[RuleApplication, ...] = ()

    verdict = False


@dataclass(frozen=True)
class Reduced:
    graph: EnrichedGraph
    trace: tuple[RuleApplication, ...] = ()
    vertex_map: tuple[int, ...] = field(default=())

    verdict = None


ReductionOutcome = Union[EarlyYes, EarlyNo, Reduced]


class _Found(Exception):
    """Internal early exit carrying a verdict."""

    def __init__(self, outcome_kind: str, payload):
        super().__init__(outcome_kind)
        self.kind = outcome_kind
        self.payload = payload


# -- state ------------------------------------------------------------------


def _components(g: EnrichedGraph, alive: Iterable[int]) -> list[set[int]]:
    alive = set(alive)
    comps = []
    while alive:
        s = min(alive)
        comp = {s}
        queue = deque([s])
        alive.discard(s)
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y in alive:
                    alive.discard(y)
                    comp.add(y)
                    queue.append(y)
        comps.append(comp)
    return comps


def _valid(g: EnrichedGraph, alive, loops, c) -> bool:
    c = set(c)
    if not c or not c <= alive or c & loops:
        return False
    if any(g.neighbors(v) & c for v in c):
        return False
    return len(_components(g, set(alive) - c)) >= 2


class _Work:
    def __init__(self, g: EnrichedGraph):
        self.g = g
        self.alive: set[int] = set(range(g.n))
        self.loops: set[int] = set(g.loops)
        self.trace: list[RuleApplication] = []
        self.step_no = 0

    def nbrs(self, v: int) -> frozenset:
        return self.g.neighbors(v) & self.alive

    def deg(self, v: int) -> int:
        return len(self.nbrs(v))

    def valid(self, c) -> bool:
        return _valid(self.g, self.alive, self.loops, c)

    def connected(self) -> bool:
        return len(_components(self.g, self.alive)) <= 1

    def apply(self, rule: str, delete=(), loop=(), report=()) -> None:
        self.step_no += 1
        s = self.step_no
        if report:
            self.trace.append(RuleApplication(rule, tuple(sorted(report)), REPORT, s))
        if delete:
            self.trace.append(RuleApplication(rule, tuple(sorted(delete)), DELETE, s))
            self.alive -= set(delete)
            self.loops -= set(delete)
        if loop:
            self.trace.append(RuleApplication(rule, tuple(sorted(loop)), ADD_LOOP, s))
            self.loops |= set(loop)

    def yes(self, rule: str, cut) -> None:
        self.apply(rule, report=cut)
        raise _Found("yes", frozenset(cut))

    def no(self, rule: str, reason: str, vertices=()) -> None:
        self.apply(rule, report=vertices or sorted(self.alive)[:1])
        raise _Found("no", reason)

    def snapshot(self) -> EnrichedGraph:
        keep = sorted(self.alive)
        sub, _ = self.g.induced(keep)
        index = {old: new for new, old in enumerate(keep)}
        return sub.with_loops({index[v] for v in self.loops})


def _finish(w: _Work, body) -> ReductionOutcome:
    try:
        body()
    except _Found as f:
        trace = tuple(w.trace)
        if f.kind == "yes":
            return EarlyYes(lift_witness(w.g, trace, f.payload), trace)
        return EarlyNo(f.payload, trace)
    keep = tuple(sorted(w.alive))
    return Reduced(w.snapshot(), tuple(w.trace), keep)


# -- trace replay and witness lifting ---------------------------------------


def _states(g: EnrichedGraph, trace) -> dict[int, tuple[set, set, set]]:
    """State before each step plus the vertices the step touched."""
    alive, loops = set(range(g.n)), set(g.loops)
    out: dict[int, tuple[set, set, set]] = {}
    for app in trace:
        if app.step not in out:
            out[app.step] = (set(alive), set(loops), set())
        out[app.step][2].update(app.vertices)
        if app.action == DELETE:
            alive -= set(app.vertices)
            loops -= set(app.vertices)
        elif app.action == ADD_LOOP:
            loops |= set(app.vertices)
    return out


def apply_trace(g: EnrichedGraph, trace) -> tuple[EnrichedGraph, tuple[int, ...]]:
    """Replay a trace on ``g``; returns the compacted graph and its vertex map."""
    w = _Work(g)
    for app in trace:
        if app.action == DELETE:
            w.alive -= set(app.vertices)
            w.loops -= set(app.vertices)
        elif app.action == ADD_LOOP:
            w.loops |= set(app.vertices)
        elif app.action != REPORT:
            raise InputError(f"unknown action {app.action!r}")
    return w.snapshot(), tuple(sorted(w.alive))


def lift_witness(g: EnrichedGraph, trace, cut) -> frozenset:
    """Pull a stable cut of the trace's end state back to a stable cut of ``g``.

    ``cut`` uses ids of ``g``.  Each step is undone by trying the smallest
    replacement of the cut inside the vertices that step touched.
    """
    c = set(cut)
    for step, (alive, loops, touched) in sorted(_states(g, trace).items(), reverse=True):
        if _valid(g, alive, loops, c):
            continue
        pool = sorted(touched & alive)
        base = c - touched
        for size in range(len(pool) + 1):
            hit = next(
                (set(s) for s in combinations(pool, size) if _valid(g, alive, loops, base | set(s))),
                None,
            )
            if hit is not None:
                c = base | hit
                break
        else:
            raise InvariantError(f"cannot lift stable cut back through step {step}")
    if not _valid(g, set(range(g.n)), set(g.loops), c):
        raise InvariantError("lifted cut does not verify on the input graph")
    return frozenset(c)


def lift_reduced_cut(g: EnrichedGraph, outcome: Reduced, cut) -> frozenset:
    """Translate a cut of ``outcome.graph`` (compact ids) to one of ``g``."""
    return lift_witness(g, outcome.trace, {outcome.vertex_map[v] for v in cut})


def render_trace(trace) -> str:
    return "".join(app.render() + "\n" for app in trace)


# -- shared pre-check --------------------------------------------------------


def _precheck(w: _Work) -> None:
    """Disconnected inputs are decided outright: such a graph has a stable
    cut iff a single loopless vertex leaves it disconnected."""
    if w.connected():
        return
    for v in sorted(w.alive):
        if v not in w.loops and w.valid({v}):
            w.yes("pre", {v})
    w.no("pre", "disconnected input with no separating loopless vertex")


# -- general observations ----------------------------------------------------


def _rule1(w: _Work) -> bool:
    for v in sorted(w.alive):
        d = w.deg(v)
        if d == 1 or (d == 2 and v not in w.loops):
            if d == 2 and w.valid({v}):
                w.yes("1", {v})
            nv = w.nbrs(v)
            if w.valid(nv):
                w.yes("1", nv)
            w.apply("1", delete={v})
            return True
    return False


def _rule2(w: _Work) -> bool:
    for v in sorted(w.alive):
        if v in w.loops and w.deg(v) == 2:
            a, b = sorted(w.nbrs(v))
            if w.g.has_edge(a, b):
                w.apply("2", delete={v})
                return True
    return False


def _rule3(w: _Work) -> bool:
    order = sorted(w.alive)
    for x, y in combinations(order, 2):
        nx, ny = w.nbrs(x), w.nbrs(y)
        if y in nx and nx | {x} == ny | {y}:
            w.apply("3", delete={y}, loop=() if x in w.loops else {x})
            return True
        if y not in nx and nx == ny and (x in w.loops) == (y in w.loops):
            if w.valid(ny):
                w.yes("3", ny)
            w.apply("3", delete={y})
            return True
    return False


def _rule4(w: _Work) -> bool:
    order = sorted(w.alive)
    for u in order:
        nu = w.nbrs(u)
        for v in order:
            if u == v or not nu <= w.nbrs(v):
                continue
            if u in w.loops and v not in w.loops:
                continue
            if w.valid(nu):
                w.yes("4", nu)
            w.apply("4", delete={u})
            return True
    return False


_GEN_RULES = (_rule1, _rule2, _rule3, _rule4)


def _gen_fixpoint(w: _Work) -> bool:
    changed = False
    while any(rule(w) for rule in _GEN_RULES):
        changed = True
    return changed


def reduce_gen_obs(g: EnrichedGraph) -> ReductionOutcome:
    """Degree-1/2, triangle, twin and domination rules to a fixpoint."""
    w = _Work(g)

    def body():
        _precheck(w)
        _gen_fixpoint(w)

    return _finish(w, body)


def audit_gen_obs(g: EnrichedGraph) -> list[str]:
    bad = []
    for v in g.vertices():
        d = len(g.neighbors(v))
        if d == 1:
            bad.append(f"1: vertex {v} has degree 1")
        if d == 2:
            if v not in g.loops:
                bad.append(f"1: degree-2 vertex {v} is loopless")
            a, b = sorted(g.neighbors(v))
            if g.has_edge(a, b):
                bad.append(f"2: degree-2 vertex {v} lies in a triangle")
    for x, y in combinations(g.vertices(), 2):
        nx, ny = g.neighbors(x), g.neighbors(y)
        if nx == ny or (y in nx and nx | {x} == ny | {y}):
            bad.append(f"3: vertices {x} and {y} are twins")
    for u in g.vertices():
        for v in g.vertices():
            if u != v and g.neighbors(u) <= g.neighbors(v):
                if not (u in g.loops and v not in g.loops):
                    bad.append(f"4: N({u}) is inside N({v})")
    return bad


# -- H1-free observations ----------------------------------------------------


def _h5(w: _Work) -> bool:
    for v in sorted(w.alive):
        if v in w.loops or any(u not in w.loops for u in w.nbrs(v)):
            continue
        if w.valid({v}):
            w.yes("h5", {v})
        w.apply("h5", delete={v})
        return True
    return False


def _h6_k4(w: _Work, d: set[int]) -> None:
    if len(w.alive) == 4:
        w.no("h6", "the graph is K4", d)
    boundary = sorted(x for x in d if w.nbrs(x) - d)
    outside = set().union(*(w.nbrs(x) for x in d)) - d
    if len(boundary) == 1:
        (x,) = boundary
        if x not in w.loops and w.valid({x}):
            w.yes("h6", {x})
        w.apply("h6", delete=d - {x}, report=d)
        return
    if len(outside) != 1:
        raise InvariantError(f"K4 on {sorted(d)} has several attachments; input not H1-free")
    (a,) = outside
    if w.alive == d | {a}:
        w.no("h6", "K4 with a single extra vertex attached", d | {a})
    if a not in w.loops and w.valid({a}):
        w.yes("h6", {a})
    w.apply("h6", delete=d, report=d | {a})


def _h6_diamond(w: _Work, x: int, y: int, z: int, zz: int) -> None:
    d = {x, y, z, zz}
    ax, ay = w.nbrs(x) - d, w.nbrs(y) - d
    if len(ax) != 1 or len(ay) != 1:
        raise InvariantError(f"diamond {sorted(d)}: tips do not have exactly one outside neighbour")
    (a,), (b,) = ax, ay
    if a == b:
        if w.alive != d | {a}:
            raise InvariantError(f"diamond {sorted(d)} with shared tip neighbour is not the whole graph")
        if w.valid({x, y}):
            w.yes("h6", {x, y})
        w.no("h6", "diamond with both tips on one vertex and no stable tip pair", d | {a})
    # z and zz are true twins here; keep the smaller one
    w.apply("h6", delete={zz}, loop=() if z in w.loops else {z}, report=d)


def _h6(w: _Work) -> bool:
    for z, zz in combinations(sorted(w.alive), 2):
        if zz not in w.nbrs(z):
            continue
        common = sorted(w.nbrs(z) & w.nbrs(zz))
        if len(common) < 2:
            continue
        x, y = common[0], common[1]
        if w.g.has_edge(x, y):
            _h6_k4(w, {x, y, z, zz})
        else:
            _h6_diamond(w, x, y, z, zz)
        return True
    return False


def _check_h1_free(g: EnrichedGraph) -> None:
    if contains_subgraph(g, build_pattern(H1())) is not None:
        raise PreconditionError("input contains H1 as a subgraph")


def reduce_h_obs(g: EnrichedGraph, check: bool = True) -> ReductionOutcome:
    """General observations plus the H1-free rules; gen-obs reruns after
    every change."""
    if check:
        _check_h1_free(g)
    w = _Work(g)

    def body():
        _precheck(w)
        if g.n == 4 and g.edge_count() == 6:
            w.no("h6", "the graph is K4", range(4))
        _gen_fixpoint(w)
        while _h5(w) or _h6(w):
            _gen_fixpoint(w)

    return _finish(w, body)


def _triangles(g: EnrichedGraph) -> list[tuple[int, int, int]]:
    out = []
    for a, b in g.edges:
        for c in g.neighbors(a) & g.neighbors(b):
            if c > b:
                out.append((a, b, c))
    return out


def audit_h_obs(g: EnrichedGraph) -> list[str]:
    bad = []
    tris = _triangles(g)
    for v in g.vertices():
        if v in g.loops:
            continue
        if not any(v in t and any(u != v and u not in g.loops for u in t) for t in tris):
            bad.append(f"h5: loopless vertex {v} is in no triangle with another loopless vertex")
    seen: dict[int, tuple] = {}
    for t in tris:
        for v in t:
            if v in seen:
                bad.append(f"h6: triangles {seen[v]} and {t} share vertex {v}")
            seen[v] = t
    for t in tris:
        for v in t:
            out = g.neighbors(v) - set(t)
            if len(out) != 1:
                bad.append(f"h7: triangle vertex {v} has {len(out)} outside neighbours")
            elif len(g.neighbors(next(iter(out)))) != 2:
                bad.append(f"h7: outside neighbour of triangle vertex {v} has degree != 2")
    return bad


# -- small separators --------------------------------------------------------


def _connected_sets(w: _Work, kmax: int):
    """Connected vertex sets of size 1..kmax, level by level, each level in
    sorted-tuple order."""
    level = {frozenset({v}) for v in w.alive}
    size = 1
    while level and size <= kmax:
        yield size, sorted(tuple(sorted(s)) for s in level)
        if size == kmax:
            return
        nxt = set()
        for s in level:
            frontier = set().union(*(w.nbrs(v) for v in s)) - s
            for u in frontier:
                nxt.add(s | {u})
        level = nxt
        size += 1


def _eligible(w: _Work, z: set[int]) -> bool:
    return any(len(w.nbrs(v) & z) >= 3 for v in z)


def _boundary(w: _Work, z: set[int]) -> list[int]:
    return sorted(v for v in z if w.nbrs(v) - z)


_A, _B, _C = 0, 1, 2
_OK = {(_A, _A), (_A, _C), (_B, _B), (_B, _C), (_C, _A), (_C, _B)}


def _labellings(g: EnrichedGraph, verts: list[int], loops: set[int]):
    """All labellings of ``g[verts]`` into left (0), right (1), middle (2)
    respecting adjacency and loops."""
    order = list(verts)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[pos[u] for u in g.neighbors(v) if u in pos and pos[u] < i] for i, v in enumerate(order)]
    lab = [0] * len(order)

    def rec(i):
        if i == len(order):
            yield tuple(lab)
            return
        for t in (_A, _B, _C):
            if t == _C and order[i] in loops:
                continue
            if all((t, lab[j]) in _OK for j in earlier[i]):
                lab[i] = t
                yield from rec(i + 1)

    yield from rec(0)


def _gadget_type(g: EnrichedGraph, verts: list[int], loops: set[int], v: int, vp: int):
    """What a two-terminal gadget offers the rest of a connected graph.

    Every component of the outside part touches ``v`` or ``v'``, so an
    outside labelling that avoids the middle label is monochrome per
    terminal: its label set is exactly {lab(v), lab(v')}.  Otherwise it
    contains the middle label.  For each terminal labelling we record which
    of these candidate outside label sets the gadget completes to all three
    labels.
    """
    ends = (verts.index(v), verts.index(vp))
    masks: dict[tuple[int, int], set[frozenset]] = {}
    for lab in _labellings(g, verts, loops):
        masks.setdefault((lab[ends[0]], lab[ends[1]]), set()).add(frozenset(lab))
    full = frozenset((_A, _B, _C))
    out = set()
    for key, inner in masks.items():
        base = frozenset(key)
        outside = [base] if _C not in base else []
        rest = full - base - {_C}
        for r in range(len(rest) + 1):
            for extra in combinations(sorted(rest), r):
                outside.append(base | {_C} | set(extra))
        for m in outside:
            if any(m | x == full for x in inner):
                out.add((key, m))
    return frozenset(out)


def _shortest_path(w: _Work, z: set[int], s: int, t: int) -> list[int]:
    parent = {s: None}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            break
        for y in sorted(w.nbrs(x) & z):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path, x = [], t
    while x is not None:
        path.append(x)
        x = parent[x]
    return path[::-1]


def _s3_candidates(w: _Work, z: set[int], v: int, vp: int):
    """Paper-order prescription first, then a search over loop patterns."""
    path = _shortest_path(w, z, v, vp)
    inner = z - {v, vp}
    separable = False
    for c in independent_loopless_sets(w.g, [u for u in inner if u not in w.loops]):
        if not any(v in comp and vp in comp for comp in _components(w.g, z - set(c))):
            separable = True
            break
    lv, lvp = v in w.loops, vp in w.loops
    if separable:
        loopless = [u for u in path if u not in w.loops]
        skip = {loopless[0]} if loopless else set()
        yield set(path), set(path) - skip
    elif lv and lvp:
        yield set(path), set(path)
    elif lv != lvp:
        free = vp if lv else v
        yield set(path), set(path) - {free}
    else:
        yield {v, vp}, set()
    # fallback search
    for keep in (set(path), {v, vp}):
        pool = sorted(u for u in keep if u not in w.loops)
        for size in range(len(pool) + 1):
            for extra in combinations(pool, size):
                yield keep, set(extra)


def _try_s3(w: _Work, z: set[int], v: int, vp: int) -> bool:
    target = _gadget_type(w.g, sorted(z), w.loops, v, vp)
    tried = set()
    for keep, new_loops in _s3_candidates(w, z, v, vp):
        key = (frozenset(keep), frozenset(new_loops - w.loops))
        if key in tried:
            continue
        tried.add(key)
        loops = (w.loops & keep) | new_loops
        # edges outside G[keep] are unchanged, so comparing gadget types suffices
        if _gadget_type(w.g, sorted(keep), loops, v, vp) == target:
            w.apply("s3", delete=z - keep, loop=key[1], report=z)
            return True
    return False


def _small_cut_step(w: _Work, k: int, skipped: set) -> bool:
    for size, sets in _connected_sets(w, k):
        if size < 3:
            continue
        for zt in sets:
            z = set(zt)
            if not _eligible(w, z):
                continue
            bd = _boundary(w, z)
            if len(bd) > 2 or frozenset(zt) in skipped:
                continue
            for c in independent_loopless_sets(w.g, [u for u in zt if u not in w.loops]):
                if w.valid(c):
                    w.yes("s1", c)
            if not bd:
                w.no("s1", "the whole graph was searched and has no stable cut", z)
            if len(bd) == 1:
                (v,) = bd
                w.apply("s2", delete=z - {v}, report=z)
                return True
            if _try_s3(w, z, bd[0], bd[1]):
                return True
            skipped.add(frozenset(zt))
    return False


def reduce_small_cut(g: EnrichedGraph, k: int = 6) -> ReductionOutcome:
    """Rules s1-s3 on connected sets of at most ``k`` vertices, interleaved
    with the general observations until neither applies."""
    if k < 3:
        raise InputError(f"k must be >= 3, got {k}")
    w = _Work(g)
    skipped: set = set()

    def body():
        _precheck(w)
        while True:
            if _small_cut_step(w, k, skipped):
                _gen_fixpoint(w)
                continue
            if not _gen_fixpoint(w):
                break

    return _finish(w, body)


def audit_small_cut(g: EnrichedGraph, k: int) -> list[str]:
    w = _Work(g)
    bad = []
    for size, sets in _connected_sets(w, k):
        if size < 3:
            continue
        for zt in sets:
            z = set(zt)
            if _eligible(w, z) and len(_boundary(w, z)) < 3:
                bad.append(f"set {list(zt)} has only {len(_boundary(w, z))} boundary vertices")
    return bad
