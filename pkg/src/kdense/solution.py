from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import Graph, VertexSet, density_of, vertex_set

__all__ = ["SolutionSet", "InfeasibleError", "check_k_feasible"]


class InfeasibleError(ValueError):
    """The requested number of subgraphs cannot exist in the graph."""


@dataclass(frozen=True)
class SolutionSet:
    """Ordered list of vertex sets with their exact densities."""

    subgraphs: tuple[VertexSet, ...]
    densities: tuple[Fraction, ...]
    total: Fraction
    algorithm: str = ""

    @classmethod
    def from_sets(cls, G: Graph, sets: Iterable[Iterable[int]],
                  algorithm: str = "") -> "SolutionSet":
        subs = tuple(vertex_set(S) for S in sets)
        dens = tuple(density_of(G, S) for S in subs)
        return cls(subs, dens, sum(dens, Fraction(0)), algorithm)

    def __len__(self):
        return len(self.subgraphs)


def check_k_feasible(n: int, k: int) -> None:
    """Raise unless ``2**n - 1 >= k`` (enough distinct non-empty subsets)."""
    if k < 1:
        raise InfeasibleError(f"k must be at least 1, got {k}")
    if n < 64 and (1 << n) - 1 < k:
        raise InfeasibleError(f"a graph on {n} vertices has only {(1 << n) - 1} "
                              f"non-empty vertex subsets, fewer than k={k}")
