"""Instance generators and checkers for the two hardness reductions.

*Clique partition* instances: a base graph, optionally padded with
``k - 3`` disjoint cliques on ``|V|`` vertices each.  The base graph splits
into three cliques exactly when the padded graph has ``k`` disjoint
subgraphs reaching :func:`clique_partition_threshold`.

*Bisection* instances: a clique on ``n_B`` vertices fully joined to a copy
of the base graph ``G_B``.  Pairs of subgraphs that overlap in at most 2/3
of either one correspond to bisections of ``G_B``; a bisection cutting
``h`` edges gives total density :func:`bisection_value`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .graph import (
    Graph,
    GraphError,
    VertexSet,
    build_graph,
    complete_graph,
    density_of,
    disjoint_union,
    induced_edge_count,
    vertex_set,
)
from .oracle import check_feasible, overlap

log = logging.getLogger(__name__)

ALPHA = Fraction(2, 3)

__all__ = [
    "ALPHA",
    "BisectionInstance",
    "CliquePartitionInstance",
    "NormalizationError",
    "gen_from_clique_partition",
    "clique_partition_threshold",
    "is_three_clique_partitionable",
    "gen_from_bisection",
    "bisection_value",
    "min_bisection_cut",
    "density_merge_check",
    "normalize_overlap_solution",
    "verify_bisection_equivalence",
]


class NormalizationError(RuntimeError):
    """A normalised overlap solution failed one of its guarantees."""


@dataclass(frozen=True)
class CliquePartitionInstance:
    base: Graph
    built: Graph
    k: int
    threshold: Fraction


@dataclass(frozen=True)
class BisectionInstance:
    base: Graph
    built: Graph
    clique_ids: VertexSet
    base_ids: VertexSet

    @property
    def n_base(self) -> int:
        return self.base.n

    def to_built(self, base_vertices: Sequence[int]) -> VertexSet:
        """Map base-graph vertex ids to their ids in ``built``."""
        return vertex_set(self.n_base + b for b in base_vertices)


def clique_partition_threshold(nV: int, k: int) -> Fraction:
    if k < 3 or nV < 3:
        raise ValueError(f"need k >= 3 and |V| >= 3, got k={k}, |V|={nV}")
    return Fraction((k - 3) * (nV - 1), 2) + Fraction(nV - 3, 2)


def gen_from_clique_partition(G: Graph, k: int) -> CliquePartitionInstance:
    if k < 3:
        raise ValueError(f"the clique-partition reduction needs k >= 3, got {k}")
    if G.n < 3:
        raise ValueError(f"base graph needs at least 3 vertices, got {G.n}")
    pads = [complete_graph(G.n) for _ in range(k - 3)]
    built = disjoint_union(G, *pads) if pads else G
    return CliquePartitionInstance(G, built, k, clique_partition_threshold(G.n, k))


def is_three_clique_partitionable(G: Graph) -> bool:
    """Whether ``V`` splits into at most three cliques (3-colouring of the complement).

    Plain backtracking; meant for small graphs.
    """
    n = G.n
    colour = [-1] * n

    def place(v, used):
        if v == n:
            return True
        # a fresh colour is only tried once (colours are interchangeable)
        for c in range(min(used + 1, 3)):
            # vertices sharing a colour must be pairwise adjacent in G
            if all(colour[u] != c or G.has_edge(u, v) for u in range(v)):
                colour[v] = c
                if place(v + 1, max(used, c + 1)):
                    return True
        colour[v] = -1
        return False

    return place(0, 0)


def gen_from_bisection(G_B: Graph) -> BisectionInstance:
    """Clique ``0..n-1`` joined to a copy of ``G_B`` on ``n..2n-1``."""
    n = G_B.n
    if n < 2 or n % 2:
        raise GraphError(f"bisection base graph needs an even number (>= 2) of vertices, got {n}")
    edges = [(u, v) for u, v in combinations(range(n), 2)]
    edges += [(c, n + b) for c in range(n) for b in range(n)]
    edges += [(n + u, n + v) for u, v in G_B.edges]
    built = build_graph(2 * n, edges)
    return BisectionInstance(G_B, built, tuple(range(n)), tuple(range(n, 2 * n)))


def bisection_value(nB: int, mB: int, h: int) -> Fraction:
    """Total density of the overlap pair induced by a bisection cutting ``h`` edges."""
    if nB % 2:
        raise ValueError(f"nB must be even, got {nB}")
    if not 0 <= h <= mB:
        raise ValueError(f"h must lie in [0, {mB}], got {h}")
    return Fraction(2 * nB * nB - nB + mB - h) / Fraction(3 * nB, 2)


def min_bisection_cut(G_B: Graph) -> tuple[int, tuple[VertexSet, VertexSet]]:
    """Brute-force minimum bisection: ``(h*, (part1, part2))``."""
    n = G_B.n
    if n % 2:
        raise ValueError("bisection needs an even vertex count")
    best = None
    # fixing vertex 0 in the first part avoids counting each split twice
    for rest in combinations(range(1, n), n // 2 - 1):
        part = (0,) + rest
        inside = set(part)
        cut = sum(1 for u, v in G_B.edges if (u in inside) != (v in inside))
        if best is None or cut < best[0]:
            other = tuple(v for v in range(n) if v not in inside)
            best = (cut, (part, other))
    return best


def density_merge_check(G: Graph, Vp: Sequence[int], X: Sequence[int]) -> bool:
    """Whether ``X`` brings at least the density of ``G[Vp]`` when merged into it.

    ``d_x`` counts edges inside ``X`` plus edges between ``X`` and ``Vp``,
    per vertex of ``X``.  When ``d_x >= density(G[Vp])`` the merged set is
    verified to be no sparser than ``Vp``.
    """
    A, B = set(Vp), set(X)
    if not A or not B:
        raise GraphError("both vertex sets must be non-empty")
    if A & B:
        raise GraphError(f"sets overlap in {sorted(A & B)}")
    between = sum(1 for x in B for u in G.neighbors(x) if u in A)
    d_x = Fraction(induced_edge_count(G, B) + between, len(B))
    d = density_of(G, A)
    if d_x < d:
        return False
    merged = density_of(G, A | B)
    assert merged >= d, (merged, d)
    return True


def normalize_overlap_solution(inst: BisectionInstance, V1: Sequence[int],
                               V2: Sequence[int]) -> tuple[VertexSet, VertexSet]:
    """Rewrite a feasible 2/3-overlap pair into bisection shape.

    The output pair shares exactly the clique, each side holds half of the
    base vertices, together they cover the whole graph, and the total
    density is not lower than the input's.  Every "pick a vertex" choice
    takes the smallest id.

    Raises
    ------
    GraphError
        The input pair is not feasible at overlap 2/3.
    NormalizationError
        A guarantee of the output failed (would indicate a bug).
    """
    G = inst.built
    n = inst.n_base
    Vc, VB = set(inst.clique_ids), set(inst.base_ids)
    V1, V2 = vertex_set(V1), vertex_set(V2)
    if not check_feasible(overlap(ALPHA), [V1, V2]) or not set(V1 + V2) <= VB | Vc:
        raise GraphError("input pair is not a feasible 2/3-overlap solution on this instance")
    before = (density_of(G, V1), density_of(G, V2))
    Y = [set(V1), set(V2)]

    # clique vertices nobody uses are free to add: adjacent to everything
    for c in sorted(Vc - Y[0] - Y[1]):
        Y[_sparser(Y)].add(c)

    # preliminary step: trade shared base vertices for missing clique vertices
    while True:
        shared = sorted(Y[0] & Y[1] & VB)
        lacking = [i for i in (0, 1) if Vc - Y[i]]
        if not shared or not lacking:
            break
        i = lacking[0]
        Y[i].remove(shared[0])
        Y[i].add(min(Vc - Y[i]))

    # step 1: cover every base vertex, paired with a missing clique vertex if any
    for u in sorted(VB - Y[0] - Y[1]):
        lacking = [i for i in (0, 1) if Vc - Y[i]]
        if lacking:
            i = lacking[0]
            Y[i].add(min(Vc - Y[i]))
        else:
            i = _sparser(Y)
        Y[i].add(u)

    # step 2: balance the base halves
    while len(Y[0] & VB) != len(Y[1] & VB):
        big = 0 if len(Y[0] & VB) > len(Y[1] & VB) else 1
        small = 1 - big
        if Vc - Y[big]:
            log.debug("larger side misses clique vertices %s while balancing",
                        sorted(Vc - Y[big]))
        u = min(Y[big] & VB)
        Y[big].remove(u)
        Y[small].add(u)
        if Vc - Y[small]:
            Y[small].add(min(Vc - Y[small]))
    for i in (0, 1):
        Y[i] |= Vc

    out = (vertex_set(Y[0]), vertex_set(Y[1]))
    _check_normalized(inst, out, before)
    return out


def _sparser(Y):
    return 0 if len(Y[0]) <= len(Y[1]) else 1


def _check_normalized(inst, out, before):
    G = inst.built
    n = inst.n_base
    Y1, Y2 = out
    Vc = set(inst.clique_ids)
    problems = []
    if set(Y1) & set(Y2) != Vc:
        problems.append("intersection is not the clique")
    if len(Y1) != 3 * n // 2 or len(Y2) != 3 * n // 2:
        problems.append(f"sizes {len(Y1)}, {len(Y2)} differ from {3 * n // 2}")
    if set(Y1) | set(Y2) != set(range(G.n)):
        problems.append("pair does not cover the graph")
    if not check_feasible(overlap(ALPHA), [Y1, Y2]):
        problems.append("pair violates the 2/3 overlap bound")
    after = (density_of(G, Y1), density_of(G, Y2))
    if any(d >= n for d in after):
        problems.append(f"density {max(after)} reaches n_B={n}")
    if sum(after) < sum(before):
        problems.append(f"total density fell from {sum(before)} to {sum(after)}")
    if problems:
        raise NormalizationError("; ".join(problems))
    for i in (0, 1):
        if after[i] < before[i]:
            log.info("side %d density %s below input %s (total still improved)",
                     i + 1, after[i], before[i])


def verify_bisection_equivalence(inst: BisectionInstance,
                                 partition: tuple[Sequence[int], Sequence[int]],
                                 h: int) -> bool:
    """Whether the pair ``(clique + part_i)`` reaches ``bisection_value(n, m, h)``.

    ``partition`` uses base-graph vertex ids.  The comparison is exact, so
    this is true precisely when ``h`` equals the cut size of the partition.
    """
    A, B = vertex_set(partition[0]), vertex_set(partition[1])
    n = inst.n_base
    if len(A) != len(B) or set(A) & set(B) or set(A) | set(B) != set(range(n)):
        raise GraphError("partition must split the base vertices into two equal halves")
    G = inst.built
    total = sum(density_of(G, set(inst.clique_ids) | set(inst.to_built(P))) for P in (A, B))
    return total == bisection_value(n, inst.base.m, h)
