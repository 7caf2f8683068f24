"""Single-subgraph primitives built on minimum cuts.

Every exact routine here uses the same parametric test: for a rational
guess ``g = p/q`` find a vertex set ``S`` maximising the surplus

    q * (|E(S)| + w(S)) - p * |S|

via a maximum-weight closure network (one node per edge with profit ``q``,
one node per vertex with profit ``q*w(v) - p``).  Starting from the whole
vertex set, the guess is replaced by the density of the best set until no
set has positive surplus.  All arithmetic is on integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .graph import (
    EmptySetError,
    Graph,
    GraphError,
    VertexRangeError,
    VertexSet,
    density_of,
    induced_edge_count,
    vertex_set,
)
from .maxflow import FlowNetwork, max_flow_min_cut

__all__ = [
    "DensestResult",
    "densest_subgraph",
    "densest_with_vertex",
    "densest_strict_supergraph",
    "weighted_extension",
    "peel_half_approx",
]


@dataclass(frozen=True)
class DensestResult:
    vertices: VertexSet
    density: Fraction
    # set by supergraph routines: density(result) <= density(base set)
    not_denser_than_base: bool | None = None

    def __len__(self):
        return len(self.vertices)


def _induced_edges(G: Graph, verts: VertexSet) -> list[tuple[int, int]]:
    members = set(verts)
    if len(members) == G.n:
        return list(G.edges)
    return [(u, v) for u, v in G.edges if u in members and v in members]


def _best_closure(verts, edges, weights, p, q, forced):
    """Inclusion-minimal ``S`` maximising ``q*(E(S)+w(S)) - p*|S|``, ``forced`` ⊆ S."""
    nv = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    arcs = []
    finite = 0
    for j, (u, v) in enumerate(edges):
        node = 2 + nv + j
        arcs.append((0, node, q))
        finite += q
        arcs.append((node, 2 + index[u], None))
        arcs.append((node, 2 + index[v], None))
    for i, v in enumerate(verts):
        profit = q * weights.get(v, 0) - p if weights else -p
        if profit > 0:
            arcs.append((0, 2 + i, profit))
            finite += profit
        elif profit < 0:
            arcs.append((2 + i, 1, -profit))
            finite -= profit
    for v in forced:
        arcs.append((0, 2 + index[v], None))
    inf = finite + 1
    net = FlowNetwork(2 + nv + len(edges),
                      tuple((a, b, inf if c is None else c) for a, b, c in arcs), 0, 1)
    _, side = max_flow_min_cut(net)
    return tuple(v for i, v in enumerate(verts) if 2 + i in side)


def _densest(G: Graph, verts: VertexSet, weights: Mapping[int, int] | None,
             forced: Iterable[int] = ()) -> tuple[VertexSet, Fraction]:
    forced = tuple(forced)
    edges = _induced_edges(G, verts)
    best = verts
    best_d = density_of(G, best, weights)
    while True:
        p, q = best_d.numerator, best_d.denominator
        cand = _best_closure(verts, edges, weights or {}, p, q, forced)
        if not cand:
            break
        d = density_of(G, cand, weights)
        if d <= best_d:
            break
        best, best_d = cand, d
    return best, best_d


def _check_weights(G: Graph, w: Mapping[int, int] | None) -> None:
    if not w:
        return
    for v, x in w.items():
        if not 0 <= v < G.n:
            raise VertexRangeError(f"weighted vertex {v} not in graph with n={G.n}")
        if x < 0:
            raise GraphError(f"negative weight {x} on vertex {v}")


def _restrict(G: Graph, within: Iterable[int] | None) -> VertexSet:
    if within is None:
        if G.n == 0:
            raise EmptySetError("graph has no vertices")
        return G.vertices
    verts = vertex_set(within)
    if not verts:
        raise EmptySetError("restriction set is empty")
    if verts[0] < 0 or verts[-1] >= G.n:
        raise VertexRangeError(f"restriction set leaves [0, {G.n})")
    return verts


def densest_subgraph(G: Graph, w: Mapping[int, int] | None = None, *,
                     within: Iterable[int] | None = None) -> DensestResult:
    """Exact densest subgraph, optionally vertex-weighted.

    Maximises ``(|E(S)| + w(S)) / |S|`` over non-empty ``S``.  With
    ``within`` the search is restricted to the induced subgraph on that set.
    When several sets are optimal, the one returned is the minimal source
    side of the last cut, which is not necessarily unique across inputs that
    differ only by relabelling.
    """
    _check_weights(G, w)
    verts = _restrict(G, within)
    S, d = _densest(G, verts, w)
    return DensestResult(S, d)


def densest_with_vertex(G: Graph, v: int, w: Mapping[int, int] | None = None, *,
                        within: Iterable[int] | None = None) -> DensestResult:
    """Densest subgraph among the vertex sets that contain ``v``.

    The vertex is pinned to the source side of every cut with an
    infinite-capacity arc, so the parametric search only ranges over sets
    containing it.
    """
    _check_weights(G, w)
    verts = _restrict(G, within)
    if v not in set(verts):
        raise VertexRangeError(f"vertex {v} not in the searched vertex set")
    S, d = _densest(G, verts, w, forced=(v,))
    return DensestResult(S, d)


def densest_strict_supergraph(G: Graph, V0: Iterable[int]) -> DensestResult:
    """Densest induced subgraph on a strict superset of ``V0``.

    For each vertex ``u`` outside ``V0`` the densest set containing
    ``V0 + {u}`` is found with every such vertex pinned; the best of these is
    returned (first ``u`` wins ties).
    """
    base = vertex_set(V0)
    if not base:
        raise EmptySetError("base set is empty")
    if base[0] < 0 or base[-1] >= G.n:
        raise VertexRangeError(f"base set leaves [0, {G.n})")
    if len(base) == G.n:
        raise GraphError("base set is the whole graph; no strict supergraph exists")
    inside = set(base)
    best: tuple[VertexSet, Fraction] | None = None
    for u in range(G.n):
        if u in inside:
            continue
        S, d = _densest(G, G.vertices, None, forced=base + (u,))
        if best is None or d > best[1]:
            best = (S, d)
    S, d = best
    return DensestResult(S, d, d <= density_of(G, base))


def weighted_extension(G: Graph, V0: Iterable[int]) -> DensestResult:
    """Extend ``V0`` by a densest set of the rest under attachment weights.

    Each outside vertex ``v`` gets weight ``|N(v) ∩ V0|`` and a weighted
    densest subgraph ``V1`` of ``G - V0`` is appended to ``V0``.  The result
    is a strict supergraph, but it is *not* always a densest one: a smaller
    extension of slightly lower weighted density can give a denser union
    when ``V0`` is much denser than ``V1``.  Use
    :func:`densest_strict_supergraph` when optimality matters.
    """
    base = vertex_set(V0)
    if not base:
        raise EmptySetError("base set is empty")
    if len(base) >= G.n:
        raise GraphError("base set is the whole graph; no strict supergraph exists")
    inside = set(base)
    rest = tuple(v for v in range(G.n) if v not in inside)
    w = {v: len(G.neighbors(v) & inside) for v in rest}
    V1, _ = _densest(G, rest, w)
    H = vertex_set(base + V1)
    d = density_of(G, H)
    m0 = induced_edge_count(G, base)
    m1 = induced_edge_count(G, V1) + sum(w[v] for v in V1)
    assert d == Fraction(m0 + m1, len(base) + len(V1))
    return DensestResult(H, d, d <= density_of(G, base))


def peel_half_approx(G: Graph) -> DensestResult:
    """Greedy peeling: drop a minimum-degree vertex until empty, keep the best prefix.

    Ties in degree go to the smallest id.  Guarantees at least half the
    optimum density.
    """
    if G.n == 0:
        raise EmptySetError("graph has no vertices")
    alive = set(range(G.n))
    deg = [G.degree(v) for v in range(G.n)]
    m = G.m
    order: list[int] = []
    best_d = Fraction(m, G.n)
    best_cut = 0
    while len(alive) > 1:
        v = min(alive, key=lambda x: (deg[x], x))
        alive.remove(v)
        order.append(v)
        m -= deg[v]
        for u in G.adjacency[v]:
            if u in alive:
                deg[u] -= 1
        d = Fraction(m, len(alive))
        if d > best_d:
            best_d, best_cut = d, len(order)
    removed = set(order[:best_cut])
    return DensestResult(tuple(v for v in range(G.n) if v not in removed), best_d)
