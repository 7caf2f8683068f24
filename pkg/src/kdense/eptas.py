"""Approximation scheme for k distinct densest subgraphs.

Subgraphs are produced one at a time.  While every subgraph found so far is
*small* (at most ``eps - 1`` vertices) the next one is the densest among
two candidate families: densest subgraphs after deleting one vertex from
each earlier subgraph, and densest strict supergraphs of earlier
subgraphs.  The first subgraph that is not small ends the search: a *big*
one is completed by adding single outside vertices to it, a *huge* one by
repeatedly peeling its minimum-degree vertex.

The total is at least ``(1 - 1/eps)`` times the optimum once ``n`` is large
enough that ``((n - 2k)/n)**k >= 1 - 1/eps``; below that size the
brute-force oracle is used instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .densest import DensestResult, densest_strict_supergraph, densest_subgraph
from .graph import Graph, GraphError, VertexSet, min_degree_vertex, vertex_set
from .oracle import DISTINCT_LIMIT, OracleLimitError, oracle_limit, oracle_topk_distinct
from .solution import SolutionSet, check_k_feasible

__all__ = [
    "EptasConfig",
    "SizeClass",
    "eq1_holds",
    "classify",
    "small_step_candidates",
    "big_completion",
    "huge_completion",
    "eptas_topk",
]


@dataclass(frozen=True)
class EptasConfig:
    k: int
    eps: Fraction

    def __post_init__(self):
        eps = Fraction(self.eps)
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if eps <= 1:
            raise ValueError(f"eps must exceed 1, got {eps}")
        object.__setattr__(self, "eps", eps)


class SizeClass(enum.Enum):
    SMALL = "small"
    BIG = "big"
    HUGE = "huge"


def eq1_holds(n: int, k: int, eps) -> bool:
    """Whether ``((n - 2k)/n)**k >= 1 - 1/eps`` (exact; false when ``n <= 2k``)."""
    if n <= 2 * k:
        return False
    eps = Fraction(eps)
    return Fraction(n - 2 * k, n) ** k >= 1 - 1 / eps


def classify(Vi: Sequence[int], n: int, k: int, i: int, eps) -> SizeClass:
    """Size class of the ``i``-th subgraph (1-based position)."""
    size = len(Vi)
    if size <= Fraction(eps) - 1:
        return SizeClass.SMALL
    if size <= n - k - i:
        return SizeClass.BIG
    return SizeClass.HUGE


def small_step_candidates(G: Graph, prior: Sequence[Sequence[int]],
                          eps=None) -> list[DensestResult]:
    """Candidates for the next subgraph while all earlier ones are small.

    Deletion candidates come first, one per choice of a vertex from each
    earlier subgraph (in ``itertools.product`` order, duplicates of an
    earlier deletion set skipped), then one strict-supergraph candidate per
    earlier subgraph.  Candidates equal to an earlier subgraph are dropped.
    """
    prior = [vertex_set(P) for P in prior]
    if not prior:
        raise ValueError("small_step_candidates needs at least one earlier subgraph")
    if eps is not None:
        for P in prior:
            if len(P) > Fraction(eps) - 1:
                raise ValueError(f"earlier subgraph {P} is not small for eps={eps}")
    taken = set(prior)
    out: list[DensestResult] = []
    seen_deletions = set()
    for choice in product(*prior):
        removed = frozenset(choice)
        if removed in seen_deletions:
            continue
        seen_deletions.add(removed)
        rest = [v for v in range(G.n) if v not in removed]
        if not rest:
            continue
        res = densest_subgraph(G, within=rest)
        # misses a vertex of every earlier subgraph, hence distinct from all
        assert res.vertices not in taken
        out.append(res)
    for P in prior:
        if len(P) == G.n:
            continue
        res = densest_strict_supergraph(G, P)
        if res.vertices not in taken:
            out.append(res)
    return out


def big_completion(G: Graph, Vi: Sequence[int], i: int, k: int) -> list[VertexSet]:
    """``Vi`` plus one outside vertex each, using the ``k - i`` smallest outside ids."""
    base = vertex_set(Vi)
    need = k - i
    if need <= 0:
        return []
    inside = set(base)
    outside = [v for v in range(G.n) if v not in inside][:need]
    if len(outside) < need:
        raise GraphError(f"only {len(outside)} vertices outside the subgraph, need {need}")
    return [vertex_set(base + (v,)) for v in outside]


def huge_completion(G: Graph, Vi: Sequence[int], count: int) -> list[VertexSet]:
    """The next ``count`` sets obtained by peeling minimum-degree vertices off ``Vi``."""
    current = set(Vi)
    if count >= len(current):
        raise GraphError(f"cannot peel {count} vertices off a {len(current)}-vertex subgraph")
    out = []
    for _ in range(count):
        current.discard(min_degree_vertex(G, current))
        out.append(vertex_set(current))
    return out


def eptas_topk(G: Graph, cfg: EptasConfig, *, fallback: bool = True) -> SolutionSet:
    """k distinct subgraphs with total density at least ``(1 - 1/eps)`` of optimal.

    Parameters
    ----------
    G : Graph
    cfg : EptasConfig
    fallback : bool
        When true (the default) instances with ``((n-2k)/n)**k < 1 - 1/eps``
        are solved exactly by enumeration, which is refused above
        ``n = 24``.  When false the greedy construction runs regardless;
        the ratio guarantee then only covers the small and big cases.

    Returns
    -------
    SolutionSet
        ``algorithm`` is ``"eptas"`` or ``"oracle"`` depending on the route.
    """
    n, k, eps = G.n, cfg.k, cfg.eps
    check_k_feasible(n, k)
    if fallback and not eq1_holds(n, k, eps):
        if n > oracle_limit(DISTINCT_LIMIT):
            raise OracleLimitError(
                f"n={n} is too small for the approximation bound with k={k}, eps={eps} "
                f"and too large to enumerate")
        return oracle_topk_distinct(G, k)
    return SolutionSet.from_sets(G, eptas_sets(G, k, eps), "eptas")


def eptas_sets(G: Graph, k: int, eps) -> list[VertexSet]:
    """The greedy construction itself, without the small-``n`` fallback."""
    eps = Fraction(eps)
    sets = [densest_subgraph(G).vertices]
    while len(sets) < k:
        i = len(sets)
        cls = classify(sets[-1], G.n, k, i, eps)
        if cls is SizeClass.SMALL:
            cands = small_step_candidates(G, sets)
            if not cands:
                raise GraphError(f"no distinct candidate left after {i} subgraphs")
            best = max(cands, key=lambda r: r.density)  # first maximum wins
            sets.append(best.vertices)
        elif cls is SizeClass.BIG:
            sets.extend(big_completion(G, sets[-1], i, k))
        else:
            sets.extend(huge_completion(G, sets[-1], k - i))
    if len(set(sets)) != len(sets):
        raise GraphError("construction produced a repeated subgraph")
    return sets
