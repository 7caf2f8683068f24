"""
Disjoint subgraphs and three-clique partitions
==============================================

Three disjoint subgraphs of an n-vertex graph reach total density
(n - 3)/2 exactly when the vertices split into three cliques.
"""

from fractions import Fraction

from kdense import build_graph, complete_graph, disjoint_union, gen_from_clique_partition, greedy_disjoint, oracle_disjoint
from kdense.reductions import is_three_clique_partitionable

planted = disjoint_union(complete_graph(4), complete_graph(3), complete_graph(2))
C7 = build_graph(7, [(i, (i + 1) % 7) for i in range(7)])

for name, G in [("K4+K3+K2", planted), ("C7", C7)]:
    sol = oracle_disjoint(G, 3)
    print(f"{name}: partitionable={is_three_clique_partitionable(G)}, "
          f"best total {sol.total}, threshold {Fraction(G.n - 3, 2)}")

###############################################################################
# Greedy deletion happens to be optimal on the planted instance.

print("greedy:", greedy_disjoint(planted, 3).subgraphs)

###############################################################################
# Padding with k - 3 extra cliques lifts the statement to larger k.

inst = gen_from_clique_partition(planted, 4)
print("k=4 instance:", inst.built, "threshold", inst.threshold)
