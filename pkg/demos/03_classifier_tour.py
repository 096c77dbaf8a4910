"""Ask the classifier about a handful of forbidden-subgraph sets.

Pattern names: P5 is a path on five vertices, C3 a triangle, K1_4 a claw
with four leaves, N1_1_1 the net, H1 the H-graph, and H1p2_2_2_2 the H-graph
with every leg subdivided to length two.

Run:  python demos/03_classifier_tour.py
"""

from enrichedcut import classify, parse_problem
from enrichedcut.builders import pattern

QUERIES = [
    ("mmc", "P5"),
    ("dcut:2", "K4"),
    ("dcut:3", "K1_4,C5"),
    ("prsc", "C3,H1p2_2_2_2"),
    ("prsc", "H1,N1_1_1"),
    ("prsc", "H1p2_2_2_1,C3"),
    ("prsc", "C4"),
    ("prsc", "N2_2_2,H1p3_3_3_3"),
]

if __name__ == "__main__":
    for problem, forbid in QUERIES:
        v = classify(parse_problem(problem), [pattern(s) for s in forbid.split(",")])
        print(f"{problem:<7} {{{forbid}}}: {v.tag}")
        if v.citation:
            print("    because", v.citation)
        for n in v.neighbours:
            print("    nearby:", n)
