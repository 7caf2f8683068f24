"""Shared fixtures and independent brute-force reference solvers.

The references here use only itertools and Fraction, so they share no code
path with the numpy oracles or the flow-based solvers under test.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import chain, combinations

import pytest

from kdense.graph import build_graph, complete_graph, disjoint_union


def all_subsets(vertices):
    vs = list(vertices)
    return chain.from_iterable(combinations(vs, r) for r in range(1, len(vs) + 1))


def ref_density(G, S, w=None):
    S = set(S)
    e = sum(1 for u, v in G.edges if u in S and v in S)
    extra = sum((w or {}).get(v, 0) for v in S)
    return Fraction(e + extra, len(S))


def ref_densest(G, w=None, must=None):
    return max(ref_density(G, S, w) for S in all_subsets(range(G.n))
               if must is None or must <= set(S))


def ref_topk(G, k):
    """The k largest subset densities, non-increasing."""
    return sorted((ref_density(G, S) for S in all_subsets(range(G.n))), reverse=True)[:k]


def random_graph(rng: random.Random, n: int, p: float | None = None):
    p = rng.random() if p is None else p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def path_graph(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k4k3():
    return disjoint_union(complete_graph(4), complete_graph(3))


@pytest.fixture
def c4():
    return cycle_graph(4)


from hypothesis import strategies as st


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def weighted_graphs(draw, min_n=1, max_n=7):
    G = draw(graphs(min_n, max_n))
    w = draw(st.lists(st.integers(0, 2), min_size=G.n, max_size=G.n))
    return G, dict(enumerate(w))
