"""Shrink a partially reflexive graph before searching for a stable cut.

Looped vertices can never sit in a stable cut, so the preprocessing rules
delete vertices or add loops while keeping the yes/no answer.  Every rule
application is logged; replaying the log on the input gives the same
reduced graph, and a cut found there lifts back to the original.

Run:  python demos/02_kernel_trace.py
"""

from enrichedcut import EarlyNo, EarlyYes, parse_graph, reduce_h_obs, reduce_small_cut, solve_stable_cut
from enrichedcut.kernel import apply_trace, lift_reduced_cut, render_trace

# an 8-cycle, looped except at 1 and 5, with loopless bridges 8 (0 to 4)
# and 9 (2 to 6); the only stable cut has to take all four loopless vertices
TEXT = """
prg 10
loop 0
loop 2
loop 3
loop 4
loop 6
loop 7
edge 0 1 1
edge 0 7 1
edge 0 8 1
edge 1 2 1
edge 2 3 1
edge 2 9 1
edge 3 4 1
edge 4 5 1
edge 4 8 1
edge 5 6 1
edge 6 7 1
edge 6 9 1
"""


def run(name, out, g):
    print(f"\n== {name}")
    print(render_trace(out.trace), end="")
    if isinstance(out, EarlyYes):
        print("early yes, cut", sorted(out.witness))
        return
    if isinstance(out, EarlyNo):
        print("early no:", out.reason)
        return
    h = out.graph
    print(f"reduced to {h.n} vertices ({h.n - len(h.loops)} loopless), kept {list(out.vertex_map)}")
    replayed, _ = apply_trace(g, out.trace)
    print("trace replays to the same graph:", replayed == h)
    cut = solve_stable_cut(h)
    print("cut in reduced graph:", cut and sorted(cut))
    if cut:
        print("lifted to the input:", sorted(lift_reduced_cut(g, out, cut)))


if __name__ == "__main__":
    g = parse_graph(TEXT)
    print("direct search:", sorted(solve_stable_cut(g) or []))
    run("general and H1-free observations", reduce_h_obs(g), g)
    run("small-cut rules, k = 5", reduce_small_cut(g, 5), g)

    # loop vertex 5 as well: now no stable cut exists
    g2 = g.with_loops(g.loops | {5})
    print("\ndirect search with 5 looped:", solve_stable_cut(g2))
    run("H1-free observations, 5 looped", reduce_h_obs(g2), g2)
    run("small-cut rules, 5 looped", reduce_small_cut(g2, 5), g2)
