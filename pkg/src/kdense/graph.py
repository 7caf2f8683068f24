"""Simple undirected graphs, induced subgraphs and exact densities.

Vertices are dense 0-based integers.  A vertex set is represented as a
sorted tuple of distinct ids, so two sets are equal exactly when their
tuples are.  Densities are :class:`fractions.Fraction` values and are never
rounded.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

VertexSet = tuple[int, ...]
Weights = Mapping[int, int]

__all__ = [
    "Graph",
    "GraphError",
    "VertexRangeError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "EmptySetError",
    "VertexSet",
    "vertex_set",
    "build_graph",
    "induced_edge_count",
    "density_of",
    "min_degree_vertex",
    "complete_graph",
    "disjoint_union",
]


class GraphError(ValueError):
    """Invalid graph or vertex-set input."""


class VertexRangeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class EmptySetError(GraphError):
    pass


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Canonical form of a collection of vertex ids (sorted, deduplicated)."""
    return tuple(sorted(set(int(v) for v in vertices)))


class Graph:
    """Immutable simple undirected graph on vertices ``0 .. n-1``.

    Use :func:`build_graph` to construct one from an edge list; it validates
    the input.  ``edges`` holds pairs ``(u, v)`` with ``u < v`` in sorted
    order and ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.
    """

    __slots__ = ("n", "edges", "adjacency", "_nbr_sets")

    def __init__(self, n: int, edges: tuple[tuple[int, int], ...],
                 adjacency: tuple[tuple[int, ...], ...]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "_nbr_sets", tuple(frozenset(a) for a in adjacency))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> VertexSet:
        return tuple(range(self.n))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Raises
    ------
    VertexRangeError
        An endpoint lies outside ``[0, n)``.
    SelfLoopError
        An edge joins a vertex to itself.
    DuplicateEdgeError
        The same unordered pair occurs twice.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexRangeError(f"endpoint {x} outside [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(sorted(seen)), tuple(tuple(sorted(a)) for a in adj))


def _check_members(G: Graph, S: Iterable[int]) -> None:
    for v in S:
        if not 0 <= v < G.n:
            raise VertexRangeError(f"vertex {v} not in graph with n={G.n}")


def induced_edge_count(G: Graph, S: Iterable[int]) -> int:
    """Number of edges of ``G`` with both endpoints in ``S``."""
    members = set(S)
    _check_members(G, members)
    nbr = G._nbr_sets
    twice = 0
    for v in members:
        if len(nbr[v]) < len(members):
            twice += sum(1 for u in nbr[v] if u in members)
        else:
            twice += len(nbr[v] & members)
    return twice // 2


def density_of(G: Graph, S: Iterable[int], w: Weights | None = None) -> Fraction:
    """Exact (weighted) density ``(|E(S)| + w(S)) / |S|``.

    Vertices missing from ``w`` weigh zero.
    """
    members = set(S)
    if not members:
        raise EmptySetError("density of an empty vertex set is undefined")
    total = induced_edge_count(G, members)
    if w:
        total += sum(w.get(v, 0) for v in members)
    return Fraction(total, len(members))


def min_degree_vertex(G: Graph, S: Iterable[int]) -> int:
    """Vertex of minimum degree in ``G[S]``; ties go to the smallest id."""
    members = set(S)
    if not members:
        raise EmptySetError("min_degree_vertex of an empty vertex set")
    _check_members(G, members)
    nbr = G._nbr_sets
    return min(members, key=lambda v: (len(nbr[v] & members), v))


def complete_graph(c: int) -> Graph:
    return build_graph(c, [(u, v) for u in range(c) for v in range(u + 1, c)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; vertices of later graphs are shifted past earlier ones."""
    edges = []
    offset = 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges)
        offset += H.n
    return build_graph(offset, edges)
