"""Hardness reductions from NAE 3-SAT 0-1 to the three cut problems.

Every generator self-checks the structural guarantee it advertises and
raises :class:`StructuralGuaranteeError` rather than return a malformed
instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .builders import Cycle, HMiddle, Star, build_pattern
from .errors import InputError, StructuralGuaranteeError
from .graph import EnrichedGraph
from .nae import NaeFormula, is_nae01_instance
from .pattern import contains_subgraph, is_subcubic


@dataclass(frozen=True)
class GadgetInstance:
    graph: EnrichedGraph
    variable_anchor: dict
    clause_anchor: dict
    params: dict = field(default_factory=dict)
    formula: Optional[NaeFormula] = None


def normalize_clauses(f: NaeFormula) -> NaeFormula:
    """Rewrite every clause to carry exactly one negative literal.

    A clause and its complement have the same NAE truth table, so a clause
    with two negatives is replaced by its complement.
    """
    out = []
    for c in f.clauses:
        neg = sum(1 for lit in c if lit < 0)
        if neg == 1:
            out.append(c)
        elif neg == 2:
            out.append(tuple(-lit for lit in c))
        else:
            raise InputError(f"clause {c} has {neg} negative literals; not an NAE 0-1 clause")
    return NaeFormula(f.nvars, tuple(out))


def _prepared(f: NaeFormula) -> tuple[NaeFormula, list[tuple[int, int, int]]]:
    """Normalised formula and clauses as (negated var, pos var, pos var)."""
    if not is_nae01_instance(f):
        raise InputError("formula is not an NAE 0-1 instance")
    f = normalize_clauses(f)
    shaped = []
    for c in f.clauses:
        (a,) = [abs(x) - 1 for x in c if x < 0]
        b, cc = [x - 1 for x in c if x > 0]
        if len({a, b, cc}) != 3:
            raise InputError(f"clause {c} repeats a variable; generators need three distinct ones")
        shaped.append((a, b, cc))
    return f, shaped


class _Builder:
    def __init__(self):
        self.n = 0
        self.loops: set[int] = set()
        self.edges: dict[tuple[int, int], int] = {}

    def new(self, looped=False) -> int:
        v = self.n
        self.n += 1
        if looped:
            self.loops.add(v)
        return v

    def edge(self, u, v, m=1):
        self.edges[(min(u, v), max(u, v))] = m

    def chain(self, u, v, internal, mults, looped=False):
        """Path u -> v through ``internal`` fresh vertices; ``mults`` gives the
        multiplicity of each of its edges in order."""
        verts = [u] + [self.new(looped) for _ in range(internal)] + [v]
        for (x, y), m in zip(zip(verts, verts[1:]), mults):
            self.edge(x, y, m)
        return verts[1:-1]

    def graph(self) -> EnrichedGraph:
        return EnrichedGraph(self.n, self.loops, self.edges)


def _occurrence_slots(f_shaped, nvars):
    """For every variable, the list of (clause, role) occurrences in order."""
    occ = [[] for _ in range(nvars)]
    for j, (a, b, c) in enumerate(f_shaped):
        occ[a].append((j, "neg"))
        occ[b].append((j, "pos1"))
        occ[c].append((j, "pos2"))
    return occ


def nae01_to_mmc(f: NaeFormula, k: int = 1) -> GadgetInstance:
    """Subcubic Multigraph Matching Cut instance.

    Variable ``x``: a path of double edges with one slot vertex per
    occurrence; slots are ``k + 1`` edges apart and the path runs ``k`` extra
    vertices past the first and last slot.  Clause ``(~a | b | c)``: a
    junction vertex joined to a's slot by ``k + 1`` double edges, and to the
    slots of ``b`` and ``c`` by ``k + 2`` edges each, the first of which is
    the only single edge.  At ``k = 1`` a one-clause formula gives the
    familiar 15-vertex picture.
    """
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    f, shaped = _prepared(f)
    occ = _occurrence_slots(shaped, f.nvars)
    B = _Builder()
    var_anchor, slot = {}, {}
    for x in range(f.nvars):
        if not occ[x]:
            var_anchor[x] = [B.new()]
            continue
        path = [B.new() for _ in range(k)]
        for idx, key in enumerate(occ[x]):
            if idx:
                path += [B.new() for _ in range(k)]
            s = B.new()
            slot[key] = s
            path.append(s)
        path += [B.new() for _ in range(k)]
        for u, v in zip(path, path[1:]):
            B.edge(u, v, 2)
        var_anchor[x] = path
    clause_anchor = {}
    for j, _ in enumerate(shaped):
        junction = B.new()
        anchor = [junction]
        anchor += B.chain(junction, slot[(j, "neg")], k, [2] * (k + 1))
        for role in ("pos1", "pos2"):
            anchor += B.chain(junction, slot[(j, role)], k + 1, [1] + [2] * (k + 1))
        clause_anchor[j] = anchor
    g = B.graph()
    if not is_subcubic(g):
        raise StructuralGuaranteeError("nae01_to_mmc produced a vertex of degree > 3")
    return GadgetInstance(g, var_anchor, clause_anchor, {"k": k}, f)


def mmc_to_dcut(gi: GadgetInstance, d: int) -> GadgetInstance:
    """Multiplicity 1 becomes ``d`` and 2 becomes ``d + 1``."""
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}")
    g = gi.graph
    if g.loops:
        raise InputError("mmc_to_dcut expects a loopless graph")
    edges = {}
    for e, m in g.edges.items():
        if m not in (1, 2):
            raise InputError(f"edge {e} has multiplicity {m}; expected 1 or 2")
        edges[e] = d if m == 1 else d + 1
    params = dict(gi.params, d=d)
    return GadgetInstance(EnrichedGraph(g.n, (), edges), gi.variable_anchor, gi.clause_anchor, params, gi.formula)


def _variable_tree(B: _Builder, occurrences: int, q: int):
    """Reflexive subcubic tree: a root with three children, leaves split in
    two (breadth first) until there is a leaf per occurrence; each tree edge
    then carries ``q`` looped subdivision vertices.  Returns (vertices,
    leaves)."""
    root = B.new(looped=True)
    verts = [root]
    if occurrences == 0:
        return verts, []
    want = max(occurrences, 3)
    children = {root: []}
    leaves = []
    for _ in range(3):
        c = B.new(looped=True)
        children[root].append(c)
        children[c] = []
        leaves.append(c)
    while len(leaves) < want:
        leaf = leaves.pop(0)
        for _ in range(2):
            c = B.new(looped=True)
            children[leaf].append(c)
            children[c] = []
            leaves.append(c)
    for p in children:
        if p != root:
            verts.append(p)
        for c in children[p]:
            verts += B.chain(p, c, q, [1] * (q + 1), looped=True)
    return verts, leaves


def _check_free(g: EnrichedGraph, patterns, what: str) -> None:
    for name, h in patterns:
        if contains_subgraph(g, h) is not None:
            raise StructuralGuaranteeError(f"{what} output contains {name}")


def _trees(B, f, shaped, q):
    occ = _occurrence_slots(shaped, f.nvars)
    var_anchor, leaf_of = {}, {}
    for x in range(f.nvars):
        verts, leaves = _variable_tree(B, len(occ[x]), q)
        var_anchor[x] = verts
        for key, leaf in zip(occ[x], leaves):
            leaf_of[key] = leaf
    return var_anchor, leaf_of


def nae01_to_prsc_triangle(f: NaeFormula, l: int = 4, kmax: int = 1, q: Optional[int] = None) -> GadgetInstance:
    """Partially reflexive stable-cut instance free of ``C4..Cl``,
    ``H1..H_kmax`` and ``K_{1,4}``.

    Clause ``(~a | b | c)`` is a triangle whose one looped corner is joined to
    a leaf of a's tree and whose loopless corners are joined to leaves of the
    trees of ``b`` and ``c``.  ``q`` defaults to ``max(l, kmax)``; a smaller
    ``q`` (e.g. 0 for the schematic drawing) skips the freeness self-check.
    """
    if l < 4 or kmax < 1:
        raise InputError("need l >= 4 and kmax >= 1")
    f, shaped = _prepared(f)
    if not shaped:
        raise InputError("formula needs at least one clause")
    full_q = max(l, kmax)
    q = full_q if q is None else q
    B = _Builder()
    var_anchor, leaf_of = _trees(B, f, shaped, q)
    clause_anchor = {}
    for j, _ in enumerate(shaped):
        r = B.new(looped=True)
        t1, t2 = B.new(), B.new()
        B.edge(r, t1)
        B.edge(r, t2)
        B.edge(t1, t2)
        B.edge(leaf_of[(j, "neg")], r)
        B.edge(leaf_of[(j, "pos1")], t1)
        B.edge(leaf_of[(j, "pos2")], t2)
        clause_anchor[j] = [r, t1, t2]
    g = B.graph()
    if q >= full_q:
        forbidden = [(f"C{i}", build_pattern(Cycle(i))) for i in range(4, l + 1)]
        forbidden += [(f"H{i}", build_pattern(HMiddle(i))) for i in range(1, kmax + 1)]
        forbidden.append(("K1_4", build_pattern(Star(4))))
        _check_free(g, forbidden, "nae01_to_prsc_triangle")
    return GadgetInstance(g, var_anchor, clause_anchor, {"l": l, "kmax": kmax, "q": q}, f)


def nae01_to_prsc_cycle(f: NaeFormula, l: int = 3, kmax: int = 2) -> GadgetInstance:
    """Triangle-free variant: each clause is a cycle of length ``2q + 3``,
    looped except for two adjacent vertices.  Positive literals attach to
    the two loopless vertices, the negated literal to the looped vertex at
    distance ``q + 1`` from both.  Free of ``C3..Cl``, ``H2..H_kmax`` and
    ``K_{1,4}``."""
    if l < 3 or kmax < 2:
        raise InputError("need l >= 3 and kmax >= 2")
    f, shaped = _prepared(f)
    if not shaped:
        raise InputError("formula needs at least one clause")
    q = max(l, kmax)
    B = _Builder()
    var_anchor, leaf_of = _trees(B, f, shaped, q)
    clause_anchor = {}
    for j, _ in enumerate(shaped):
        ring = [B.new(looped=i >= 2) for i in range(2 * q + 3)]
        for i in range(len(ring)):
            B.edge(ring[i], ring[(i + 1) % len(ring)])
        B.edge(leaf_of[(j, "pos1")], ring[0])
        B.edge(leaf_of[(j, "pos2")], ring[1])
        B.edge(leaf_of[(j, "neg")], ring[q + 2])
        clause_anchor[j] = ring
    g = B.graph()
    forbidden = [(f"C{i}", build_pattern(Cycle(i))) for i in range(3, l + 1)]
    forbidden += [(f"H{i}", build_pattern(HMiddle(i))) for i in range(2, kmax + 1)]
    forbidden.append(("K1_4", build_pattern(Star(4))))
    _check_free(g, forbidden, "nae01_to_prsc_cycle")
    return GadgetInstance(g, var_anchor, clause_anchor, {"l": l, "kmax": kmax, "q": q}, f)
