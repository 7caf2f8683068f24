"""Exact k distinct densest subgraphs, exponential only in k.

The subgraphs are found greedily: the first is a densest subgraph, and each
later one is a densest subgraph distinct from all earlier ones.  For the
latter, a best set that uses a vertex outside every earlier subgraph is
found by pinning each such vertex in turn.  A best set inside the union
``U`` of some family of earlier subgraphs is found by pinning a vertex
``v_in`` and deleting a vertex ``v_out`` of ``U``, over all families and all
ordered pairs, together with ``U`` itself.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .densest import DensestResult, densest_subgraph, densest_with_vertex
from .graph import Graph, VertexSet, vertex_set
from .solution import InfeasibleError, SolutionSet, check_k_feasible

__all__ = [
    "CoverFamily",
    "cover_families",
    "case_outside",
    "case_covered",
    "next_densest_distinct",
    "fpt_topk",
]


class CoverFamily:
    """A non-empty family of earlier vertex sets and their union."""

    __slots__ = ("members", "union")

    def __init__(self, members: Sequence[VertexSet]):
        if not members:
            raise ValueError("a cover family needs at least one member")
        self.members = tuple(members)
        self.union = vertex_set(v for S in members for v in S)

    def __repr__(self):
        return f"CoverFamily({len(self.members)} sets, union of {len(self.union)})"


def cover_families(prior: Sequence[Sequence[int]]) -> list[CoverFamily]:
    """All ``2**len(prior) - 1`` non-empty subfamilies, by bitmask order."""
    prior = [vertex_set(P) for P in prior]
    return [CoverFamily([P for j, P in enumerate(prior) if bits >> j & 1])
            for bits in range(1, 1 << len(prior))]


def _pinned(G, v, within, cache):
    key = (within, v)
    if cache is not None and key in cache:
        return cache[key]
    res = densest_with_vertex(G, v, within=within)
    if cache is not None:
        cache[key] = res
    return res


def case_outside(G: Graph, prior_union: Sequence[int], prior: Sequence[Sequence[int]] = (),
                 cache: dict | None = None) -> DensestResult | None:
    """Densest subgraph containing some vertex outside ``prior_union``.

    ``prior`` is accepted for symmetry with :func:`case_covered`; every
    result contains an uncovered vertex and so differs from all of it.
    """
    covered = set(prior_union)
    best = None
    for v in range(G.n):
        if v in covered:
            continue
        res = _pinned(G, v, G.vertices, cache)
        if best is None or res.density > best.density:
            best = res
    return best


def case_covered(G: Graph, prior: Sequence[Sequence[int]],
                 cache: dict | None = None) -> DensestResult | None:
    """Densest subgraph inside a union of earlier sets, distinct from all of them."""
    prior = [vertex_set(P) for P in prior]
    if not prior:
        raise ValueError("case_covered needs at least one earlier subgraph")
    taken = set(prior)
    best = None
    seen_unions = set()

    def offer(res):
        nonlocal best
        if res.vertices in taken:
            return
        if best is None or res.density > best.density:
            best = res

    for fam in cover_families(prior):
        U = fam.union
        if U in seen_unions:
            continue
        seen_unions.add(U)
        offer(DensestResult(U, Fraction(_edges_in(G, U), len(U))))
        for v_out in U:
            rest = tuple(x for x in U if x != v_out)
            for v_in in rest:
                offer(_pinned(G, v_in, rest, cache))
    return best


def _edges_in(G, U):
    members = set(U)
    return sum(1 for u, v in G.edges if u in members and v in members)


def next_densest_distinct(G: Graph, prior: Sequence[Sequence[int]],
                          cache: dict | None = None) -> DensestResult:
    """A densest subgraph whose vertex set differs from every set in ``prior``.

    Ties between the two cases go to the one using an uncovered vertex.
    """
    prior = [vertex_set(P) for P in prior]
    if not prior:
        return densest_subgraph(G)
    if G.n < 64 and len(set(prior)) >= (1 << G.n) - 1:
        raise InfeasibleError("every non-empty vertex subset is already taken")
    union = vertex_set(v for P in prior for v in P)
    out = case_outside(G, union, prior, cache)
    inner = case_covered(G, prior, cache)
    if out is None and inner is None:
        raise InfeasibleError("no subgraph distinct from the earlier ones was found")
    if inner is None or (out is not None and out.density >= inner.density):
        return out
    return inner


def fpt_topk(G: Graph, k: int) -> SolutionSet:
    """Optimal k pairwise distinct subgraphs (maximum total density).

    Runs ``k - 1`` rounds of :func:`next_densest_distinct` after an initial
    densest subgraph; flow results are memoised across rounds.
    """
    check_k_feasible(G.n, k)
    cache: dict = {}
    sets: list[VertexSet] = [densest_subgraph(G).vertices]
    while len(sets) < k:
        sets.append(next_densest_distinct(G, sets, cache).vertices)
    return SolutionSet.from_sets(G, sets, "fpt")
