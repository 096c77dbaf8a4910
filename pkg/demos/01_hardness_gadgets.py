"""Turn NAE 0-1 formulas into cut instances and watch the answers line up.

A formula is an NAE 0-1 instance when every clause has exactly one or two
negated literals.  Each generator below builds a graph that has the relevant
cut exactly when the formula has a satisfying assignment that is not
constant.

Run:  python demos/01_hardness_gadgets.py
"""

from enrichedcut import (
    NaeFormula,
    mmc_to_dcut,
    nae01_to_mmc,
    nae01_to_prsc_cycle,
    nae01_to_prsc_triangle,
    solve_d_cut,
    solve_matching_cut,
    solve_nae01,
    solve_stable_cut,
)
from enrichedcut.builders import pattern
from enrichedcut.pattern import is_free

YES = NaeFormula(3, ((-1, 2, 3),))
# every non-constant assignment breaks one of these three clauses
NO = NaeFormula(3, ((-1, 2, 3), (1, -2, 3), (1, 2, -3)))


def show(name, f):
    a = solve_nae01(f)
    print(f"\n== {name}: clauses {f.clauses}")
    print("   assignment:", a)

    gi = nae01_to_mmc(f, 1)
    g = gi.graph
    single = sum(1 for m in g.edges.values() if m == 1)
    print(f"   multigraph: {g.n} vertices, {single} single edges, {len(g.edges) - single} double")
    cut = solve_matching_cut(g)
    print("   matching cut:", None if cut is None else sorted(cut.a))

    for d in (2, 3):
        h = mmc_to_dcut(gi, d).graph
        print(f"   {d}-cut on scaled copy:", solve_d_cut(h, d) is not None)

    tri = nae01_to_prsc_triangle(f, 4, 1).graph
    cyc = nae01_to_prsc_cycle(f, 3, 2).graph
    print(f"   triangle construction: {tri.n} vertices, {len(tri.loops)} looped, stable cut {solve_stable_cut(tri)}")
    print(f"   cycle construction:    {cyc.n} vertices, {len(cyc.loops)} looped, stable cut {solve_stable_cut(cyc)}")
    ok = is_free(tri, [pattern("C4"), pattern("H1"), pattern("K1_4")])
    print("   triangle output avoids C4, H1 and K1_4:", ok)


if __name__ == "__main__":
    show("satisfiable", YES)
    show("unsatisfiable", NO)
