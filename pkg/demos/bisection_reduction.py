"""
Overlapping pairs and minimum bisection
=======================================

Builds the clique-plus-copy instance for a 4-cycle, solves the overlap
problem with alpha = 2/3 by enumeration, and compares it with the value
predicted from the minimum bisection of the cycle.
"""

import random
from fractions import Fraction

from kdense import (
    bisection_value,
    build_graph,
    density_of,
    gen_from_bisection,
    min_bisection_cut,
    normalize_overlap_solution,
    oracle_overlap,
)
from kdense.oracle import check_feasible, overlap

C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
inst = gen_from_bisection(C4)
print("built graph:", inst.built, "clique", inst.clique_ids, "copy", inst.base_ids)

###############################################################################
# The best bisection of C4 cuts 2 edges, predicting a total of 5.

h, parts = min_bisection_cut(C4)
print("min bisection:", parts, "cut", h, "value", bisection_value(4, C4.m, h))

sol = oracle_overlap(inst.built, 2, Fraction(2, 3))
print("oracle pair:", sol.subgraphs, "total", sol.total)

###############################################################################
# Any feasible pair can be rewritten into bisection shape without losing
# total density: both sides hold the clique plus half of the copy.

rng = random.Random(0)
alpha = overlap(Fraction(2, 3))
while True:
    V1 = sorted(rng.sample(range(8), rng.randint(1, 7)))
    V2 = sorted(rng.sample(range(8), rng.randint(1, 7)))
    if check_feasible(alpha, [V1, V2]):
        break
Y1, Y2 = normalize_overlap_solution(inst, V1, V2)
G = inst.built
print("input :", V1, V2, density_of(G, V1) + density_of(G, V2))
print("output:", Y1, Y2, density_of(G, Y1) + density_of(G, Y2))
