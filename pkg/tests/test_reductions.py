import logging
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from kdense.graph import GraphError, build_graph, complete_graph, density_of, disjoint_union
from kdense.oracle import DISJOINT, check_feasible, oracle_disjoint, oracle_overlap, overlap
from kdense.reductions import (
    ALPHA,
    NormalizationError,
    bisection_value,
    clique_partition_threshold,
    density_merge_check,
    gen_from_bisection,
    gen_from_clique_partition,
    is_three_clique_partitionable,
    min_bisection_cut,
    normalize_overlap_solution,
    verify_bisection_equivalence,
)

from conftest import cycle_graph, graphs, random_graph


def ref_partitionable(G):
    """Try every assignment of vertices to three labelled parts."""
    for labels in range(3 ** G.n):
        parts = [[], [], []]
        x = labels
        for v in range(G.n):
            parts[x % 3].append(v)
            x //= 3
        if all(G.has_edge(u, v) for P in parts for u, v in combinations(P, 2)):
            return True
    return False


def ref_min_bisection(G):
    n = G.n
    return min(sum(1 for u, v in G.edges if (u in A) != (v in A))
               for A in map(set, combinations(range(n), n // 2)))


@pytest.mark.parametrize("nV, k, expected", [(9, 3, 3), (4, 3, Fraction(1, 2)), (4, 5, Fraction(7, 2))])
def test_threshold(nV, k, expected):
    assert clique_partition_threshold(nV, k) == expected


def test_gen_clique_partition_examples():
    K333 = disjoint_union(complete_graph(3), complete_graph(3), complete_graph(3))
    assert gen_from_clique_partition(K333, 3).threshold == 3
    inst = gen_from_clique_partition(cycle_graph(5), 3)
    assert inst.threshold == 1 and oracle_disjoint(inst.built, 3).total == 1
    inst = gen_from_clique_partition(complete_graph(3), 4)
    assert inst.built == disjoint_union(complete_graph(3), complete_graph(3))
    assert inst.threshold == 1


def test_gen_clique_partition_errors(k3):
    with pytest.raises(ValueError):
        gen_from_clique_partition(k3, 2)
    with pytest.raises(ValueError):
        gen_from_clique_partition(complete_graph(2), 3)


def test_padded_instance_reaches_threshold():
    base = disjoint_union(complete_graph(2), complete_graph(1), complete_graph(1))
    inst = gen_from_clique_partition(base, 4)
    # 4 disjoint sets would need the 4-subset oracle; check the planted witness instead
    witness = [(0, 1), (2,), (3,), (4, 5, 6, 7)]
    assert check_feasible(DISJOINT, witness)
    assert sum(density_of(inst.built, S) for S in witness) == inst.threshold


def test_gen_bisection_examples(c4):
    inst = gen_from_bisection(c4)
    assert inst.built.n == 8 and inst.built.m == 26
    assert inst.clique_ids == (0, 1, 2, 3) and inst.base_ids == (4, 5, 6, 7)
    inst = gen_from_bisection(build_graph(2, []))
    assert inst.built.n == 4 and inst.built.m == 5
    with pytest.raises(GraphError):
        gen_from_bisection(complete_graph(3))


@settings(max_examples=50)
@given(graphs(min_n=2, max_n=6).filter(lambda G: G.n % 2 == 0))
def test_bisection_instance_structure(G):
    inst = gen_from_bisection(G)
    n = G.n
    B = inst.built
    assert B.n == 2 * n
    assert all(B.has_edge(a, b) for a, b in combinations(inst.clique_ids, 2))
    assert all(B.has_edge(c, b) for c in inst.clique_ids for b in inst.base_ids)
    assert all(B.has_edge(n + u, n + v) == G.has_edge(u, v) for u, v in combinations(range(n), 2))


@pytest.mark.parametrize("nB, mB, h, expected", [(4, 4, 2, 5), (4, 4, 4, Fraction(14, 3)), (2, 0, 0, 2)])
def test_bisection_value(nB, mB, h, expected):
    assert bisection_value(nB, mB, h) == expected


def test_bisection_value_errors():
    with pytest.raises(ValueError):
        bisection_value(3, 0, 0)
    with pytest.raises(ValueError):
        bisection_value(4, 4, 5)


def test_density_merge_examples(k3):
    G = build_graph(4, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1)])
    assert density_merge_check(G, [0, 1, 2], [3])
    assert density_of(G, range(4)) == Fraction(5, 4)
    G = build_graph(4, [(0, 1), (1, 2), (0, 2)])
    assert not density_merge_check(G, [0, 1, 2], [3])
    assert density_merge_check(complete_graph(2), [0], [1])
    with pytest.raises(GraphError):
        density_merge_check(k3, [0, 1], [1])


@settings(max_examples=80)
@given(graphs(min_n=2, max_n=8), st.data())
def test_density_merge_implies_no_loss(G, data):
    Vp = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1, max_size=G.n - 1))
    X = data.draw(st.sets(st.sampled_from(sorted(set(range(G.n)) - Vp)), min_size=1))
    if density_merge_check(G, Vp, X):
        assert density_of(G, Vp | X) >= density_of(G, Vp)


def test_verify_bisection_examples(c4):
    inst = gen_from_bisection(c4)
    assert verify_bisection_equivalence(inst, ((0, 1), (2, 3)), 2)
    assert verify_bisection_equivalence(inst, ((0, 2), (1, 3)), 4)
    assert not verify_bisection_equivalence(inst, ((0, 2), (1, 3)), 2)
    k2 = gen_from_bisection(complete_graph(2))
    assert verify_bisection_equivalence(k2, ((0,), (1,)), 1)
    empty2 = gen_from_bisection(build_graph(2, []))
    assert verify_bisection_equivalence(empty2, ((0,), (1,)), 0)
    with pytest.raises(GraphError):
        verify_bisection_equivalence(inst, ((0, 1, 2), (3,)), 2)


def test_normalize_fixed_point(c4):
    inst = gen_from_bisection(c4)
    V1, V2 = (0, 1, 2, 3, 4, 5), (0, 1, 2, 3, 6, 7)
    assert normalize_overlap_solution(inst, V1, V2) == (V1, V2)


def test_normalize_rejects_infeasible(c4):
    inst = gen_from_bisection(c4)
    with pytest.raises(GraphError):
        normalize_overlap_solution(inst, (0, 1, 2, 3, 4, 5, 6), (0, 1, 2, 3, 7))


def test_normalize_large_side_example(c4):
    inst = gen_from_bisection(c4)
    V1 = tuple(v for v in range(8) if v != 7)
    for V2 in [(0, 1, 2, 3, 7, 6), (2, 3, 7, 4), (7, 6)]:
        if not check_feasible(overlap(ALPHA), [V1, V2]):
            continue
        Y1, Y2 = normalize_overlap_solution(inst, V1, V2)
        assert set(Y1) & set(Y2) == set(range(4))
        assert len(Y1) == len(Y2) == 6
        before = density_of(inst.built, V1) + density_of(inst.built, V2)
        assert density_of(inst.built, Y1) + density_of(inst.built, Y2) >= before


def random_feasible_pair(rng, inst):
    N = inst.built.n
    while True:
        A = {v for v in range(N) if rng.random() < rng.random()}
        B = {v for v in range(N) if rng.random() < rng.random()}
        if A and B and check_feasible(overlap(ALPHA), [A, B]):
            return sorted(A), sorted(B)


def test_normalize_random_pairs():
    rng = random.Random(8)
    for _ in range(300):
        nB = rng.choice([2, 4, 6])
        inst = gen_from_bisection(random_graph(rng, nB))
        V1, V2 = random_feasible_pair(rng, inst)
        Y1, Y2 = normalize_overlap_solution(inst, V1, V2)
        G = inst.built
        assert set(Y1) & set(Y2) == set(inst.clique_ids)
        assert len(Y1) == len(Y2) == 3 * nB // 2
        assert check_feasible(overlap(ALPHA), [Y1, Y2])
        assert density_of(G, Y1) + density_of(G, Y2) >= density_of(G, V1) + density_of(G, V2)
        assert max(density_of(G, Y1), density_of(G, Y2)) < nB


def test_normalized_pair_value_matches_its_cut():
    rng = random.Random(9)
    for _ in range(50):
        base = random_graph(rng, 4)
        inst = gen_from_bisection(base)
        Y1, Y2 = normalize_overlap_solution(inst, *random_feasible_pair(rng, inst))
        A = [b - 4 for b in Y1 if b >= 4]
        B = [b - 4 for b in Y2 if b >= 4]
        h = sum(1 for u, v in base.edges if (u in A) != (v in A))
        assert verify_bisection_equivalence(inst, (A, B), h)


def test_normalization_error_is_runtime_error():
    assert issubclass(NormalizationError, RuntimeError)


def test_min_bisection_matches_reference():
    rng = random.Random(10)
    for _ in range(40):
        G = random_graph(rng, rng.choice([2, 4, 6]))
        h, (A, B) = min_bisection_cut(G)
        assert h == ref_min_bisection(G)
        assert len(A) == len(B) and set(A) | set(B) == set(range(G.n))


def test_three_clique_partition_matches_reference():
    rng = random.Random(12)
    for _ in range(120):
        G = random_graph(rng, rng.randint(3, 7), rng.choice([0.5, 0.7, 0.85]))
        assert is_three_clique_partitionable(G) == ref_partitionable(G)


def test_overlap_optimum_matches_min_bisection():
    for edges in [[], [(0, 1)], [(0, 1), (2, 3)], [(0, 1), (1, 2), (2, 3), (0, 3)]]:
        base = build_graph(4, edges)
        inst = gen_from_bisection(base)
        h, _ = min_bisection_cut(base)
        assert oracle_overlap(inst.built, 2, ALPHA).total == bisection_value(4, base.m, h)
