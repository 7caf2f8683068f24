"""
Densest subgraphs, one and many
===============================

A walk through the single-subgraph primitives and the two top-k solvers
on a small graph: a 4-clique and a triangle side by side.
"""

from fractions import Fraction

from kdense import (
    EptasConfig,
    complete_graph,
    densest_subgraph,
    densest_with_vertex,
    disjoint_union,
    eptas_topk,
    fpt_topk,
    oracle_topk_distinct,
    peel_half_approx,
)

G = disjoint_union(complete_graph(4), complete_graph(3))
print(G)

###############################################################################
# The densest subgraph is the 4-clique, density 6/4.  Densities are exact
# fractions throughout.

best = densest_subgraph(G)
print("densest:", best.vertices, best.density)

###############################################################################
# Pinning a triangle vertex forces the best set to meet the triangle.
# Taking both components beats the triangle alone (9/7 > 1).

pinned = densest_with_vertex(G, 5)
print("densest containing 5:", pinned.vertices, pinned.density)

###############################################################################
# Peeling minimum-degree vertices is a fast half-approximation.

print("peeling:", peel_half_approx(G).density)

###############################################################################
# Two distinct densest subgraphs.  The exact solver and brute force agree:
# 3/2 + 9/7 = 39/14.

for name, sol in [("exact", fpt_topk(G, 2)), ("oracle", oracle_topk_distinct(G, 2))]:
    print(name, [str(d) for d in sol.densities], "total", sol.total)

###############################################################################
# The approximation scheme only runs its own construction when the graph
# is large enough for its guarantee; here it falls back to enumeration.

sol = eptas_topk(G, EptasConfig(2, Fraction(4)))
print("eptas route:", sol.algorithm, "total", sol.total)
