import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given, settings, strategies as st

from kdense.densest import densest_subgraph
from kdense.fpt import case_covered, case_outside, cover_families, fpt_topk, next_densest_distinct
from kdense.graph import build_graph, complete_graph
from kdense.oracle import oracle_topk_distinct
from kdense.solution import InfeasibleError

from conftest import graphs, random_graph, ref_topk


def test_case_outside_examples(k3, k4k3):
    assert case_outside(k3, [0], [(0,)]).density == 1
    assert case_outside(k3, [0, 1, 2], [(0, 1, 2)]) is None
    res = case_outside(k4k3, [0, 1, 2, 3], [(0, 1, 2, 3)])
    assert res.vertices == tuple(range(7)) and res.density == Fraction(9, 7)


def test_case_covered_examples(k3, k4):
    assert case_covered(k3, [(0, 1, 2)]).density == Fraction(1, 2)
    # the union {0,1,2,3} is itself a candidate and differs from both earlier sets
    res = case_covered(k4, [(0, 1), (2, 3)])
    assert res.vertices == (0, 1, 2, 3) and res.density == Fraction(3, 2)
    res = case_covered(k4, [(0, 1), (2, 3), (0, 1, 2, 3)])
    assert len(res.vertices) == 3 and res.density == 1
    assert case_covered(build_graph(1, []), [(0,)]) is None


def test_next_densest_examples(k3, k4k3):
    assert next_densest_distinct(k4k3, []).vertices == (0, 1, 2, 3)
    assert next_densest_distinct(k4k3, [(0, 1, 2, 3)]).density == Fraction(9, 7)
    prior = [(0, 1, 2), (0, 1), (0, 2), (1, 2)]
    res = next_densest_distinct(k3, prior)
    assert res.density == 0 and len(res.vertices) == 1


def test_next_densest_exhausted(k3):
    prior = [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
    with pytest.raises(InfeasibleError):
        next_densest_distinct(k3, prior)


def test_fpt_examples(k3, k4k3):
    assert fpt_topk(k4k3, 2).total == Fraction(39, 14)
    sol = fpt_topk(k3, 7)
    assert sol.total == Fraction(5, 2) and len(set(sol.subgraphs)) == 7


def test_fpt_k_infeasible(k3):
    with pytest.raises(InfeasibleError):
        fpt_topk(k3, 8)


def test_cover_families_count():
    fams = cover_families([(0,), (1, 2), (2, 3)])
    assert len(fams) == 7
    assert fams[-1].union == (0, 1, 2, 3)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_k1_is_densest(G):
    assert fpt_topk(G, 1).densities[0] == densest_subgraph(G).density


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.integers(1, 5))
def test_densities_are_top_subset_densities(G, k):
    k = min(k, (1 << G.n) - 1)
    sol = fpt_topk(G, k)
    assert list(sol.densities) == ref_topk(G, k)
    assert len(set(sol.subgraphs)) == k


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7), st.data())
def test_case_results_respect_their_regions(G, data):
    prior = data.draw(st.lists(
        st.sets(st.integers(0, G.n - 1), min_size=1).map(lambda s: tuple(sorted(s))),
        min_size=1, max_size=3, unique=True))
    assume(len(prior) < (1 << G.n) - 1)
    union = {v for P in prior for v in P}
    out = case_outside(G, union, prior)
    if out is not None:
        assert set(out.vertices) - union
    inner = case_covered(G, prior)
    if inner is not None:
        assert inner.vertices not in prior
        assert any(set(inner.vertices) <= set(f.union) for f in cover_families(prior))
    nxt = next_densest_distinct(G, prior)
    assert nxt.vertices not in prior


def minimal_covers(family, target):
    covers = []
    for r in range(1, len(family) + 1):
        for C in combinations(family, r):
            if target <= set().union(*C) and not any(set(c) <= set(C) for c in covers):
                covers.append(C)
    return covers


@settings(max_examples=200)
@given(st.lists(st.frozensets(st.integers(0, 5), min_size=1), min_size=1, max_size=4, unique=True),
       st.frozensets(st.integers(0, 5), min_size=1))
def test_minimal_cover_witnesses_exist(family, target):
    for C in minimal_covers(family, target):
        U = set().union(*C)
        if target == U:
            continue
        assert any(
            not any(v_in in S and v_out not in S for S in C)
            for v_in in target for v_out in U - target
        )


def test_random_corpus_against_oracle():
    rng = random.Random(17)
    for _ in range(150):
        G = random_graph(rng, rng.randint(1, 8))
        k = min(5, (1 << G.n) - 1)
        assert fpt_topk(G, k).total == oracle_topk_distinct(G, k).total
