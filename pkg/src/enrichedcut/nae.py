"""Not-all-equal 3-SAT where both constant assignments are known solutions.

Literals are DIMACS-style signed integers: ``+(i+1)`` is variable ``i``,
``-(i+1)`` its negation.  Assignments are tuples of booleans indexed by
variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence

from .errors import InputError
from .graph import EnrichedGraph

Clause = tuple[int, int, int]
Assignment = tuple[bool, ...]


@dataclass(frozen=True)
class NaeFormula:
    nvars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        if self.nvars < 1:
            raise InputError("a formula needs at least one variable")
        clauses = tuple(tuple(int(x) for x in c) for c in self.clauses)
        for c in clauses:
            if len(c) != 3:
                raise InputError(f"clause {c} does not have exactly 3 literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.nvars:
                    raise InputError(f"literal {lit} out of range for {self.nvars} variables")
        object.__setattr__(self, "clauses", clauses)

    def occurrences(self) -> list[int]:
        occ = [0] * self.nvars
        for c in self.clauses:
            for lit in c:
                occ[abs(lit) - 1] += 1
        return occ


def _value(lit: int, a: Assignment) -> bool:
    v = a[abs(lit) - 1]
    return v if lit > 0 else not v


def eval_nae(f: NaeFormula, a: Sequence[bool]) -> bool:
    if len(a) != f.nvars:
        raise InputError(f"assignment covers {len(a)} of {f.nvars} variables")
    a = tuple(bool(x) for x in a)
    for c in f.clauses:
        vals = {_value(lit, a) for lit in c}
        if len(vals) == 1:
            return False
    return True


def is_nae01_instance(f: NaeFormula) -> bool:
    return eval_nae(f, (True,) * f.nvars) and eval_nae(f, (False,) * f.nvars)


def solve_nae01(f: NaeFormula) -> Optional[Assignment]:
    """First non-constant NAE assignment in binary counting order
    (variable 0 is the most significant bit, False before True)."""
    if not is_nae01_instance(f):
        raise InputError("formula is not satisfied by both constant assignments")
    for a in product((False, True), repeat=f.nvars):
        if all(a) or not any(a):
            continue
        if eval_nae(f, a):
            return a
    return None


def mc_to_nae01(g: EnrichedGraph) -> NaeFormula:
    """One variable per vertex; one clause ``(~x_i | x_j | x_k)`` per vertex
    ``i`` and unordered neighbour pair ``{j, k}``."""
    if not g.is_simple():
        raise InputError("mc_to_nae01 expects a simple graph")
    clauses = []
    for i in g.vertices():
        for j, k in combinations(sorted(g.neighbors(i)), 2):
            clauses.append((-(i + 1), j + 1, k + 1))
    return NaeFormula(max(g.n, 1), tuple(clauses))


def assignment_from_bipartition(n: int, side_a: set) -> Assignment:
    return tuple(v in side_a for v in range(n))
