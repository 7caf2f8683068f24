"""Brute-force solvers for the distinct, disjoint and overlapping variants.

All three enumerate vertex subsets as bitmasks.  Densities of every subset
are held as integers ``|E(S)| * (L // |S|)`` with ``L = lcm(1..n)``, which
orders subsets exactly like their rational densities and keeps sums exact
in int64 for every admissible ``n``.

The enumeration guards (``n <= 24`` distinct, ``n <= 14`` disjoint,
``n <= 12`` overlap) can be replaced by a single value taken from the
``KDENSE_ORACLE_LIMIT`` environment variable.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .densest import densest_subgraph
from .graph import Graph, VertexSet, min_degree_vertex, vertex_set
from .solution import InfeasibleError, SolutionSet, check_k_feasible

__all__ = [
    "ProblemKind",
    "DISTINCT",
    "DISJOINT",
    "overlap",
    "OracleLimitError",
    "oracle_limit",
    "check_feasible",
    "subset_keys",
    "oracle_topk_distinct",
    "oracle_disjoint",
    "oracle_overlap",
    "greedy_disjoint",
]

DISTINCT_LIMIT = 24
DISJOINT_LIMIT = 14
OVERLAP_LIMIT = 12


class OracleLimitError(ValueError):
    """Instance exceeds an enumeration guard."""


@dataclass(frozen=True)
class ProblemKind:
    name: str
    alpha: Fraction | None = None

    def __post_init__(self):
        if self.name not in ("distinct", "disjoint", "overlap"):
            raise ValueError(f"unknown problem kind {self.name!r}")
        if self.name == "overlap":
            if self.alpha is None or not 0 <= self.alpha <= 1:
                raise ValueError(f"overlap needs alpha in [0, 1], got {self.alpha}")
            object.__setattr__(self, "alpha", Fraction(self.alpha))
        elif self.alpha is not None:
            raise ValueError(f"alpha only applies to the overlap variant")


DISTINCT = ProblemKind("distinct")
DISJOINT = ProblemKind("disjoint")


def overlap(alpha) -> ProblemKind:
    return ProblemKind("overlap", Fraction(alpha))


def check_feasible(kind: ProblemKind, sets: Sequence[Sequence[int]]) -> bool:
    canon = [vertex_set(S) for S in sets]
    if any(not S for S in canon):
        return False
    if kind.name == "distinct":
        return len(set(canon)) == len(canon)
    as_sets = [set(S) for S in canon]
    if kind.name == "disjoint":
        return all(not (a & b) for a, b in combinations(as_sets, 2))
    if len(set(canon)) != len(canon):
        return False
    alpha = kind.alpha
    for a, b in combinations(as_sets, 2):
        shared = len(a & b)
        if shared > alpha * len(a) or shared > alpha * len(b):
            return False
    return True


def oracle_limit(default: int) -> int:
    raw = os.environ.get("KDENSE_ORACLE_LIMIT")
    return int(raw) if raw else default


def _guard(G: Graph, default: int, what: str) -> None:
    limit = oracle_limit(default)
    if G.n > limit:
        raise OracleLimitError(f"{what} enumerates 2^n subsets; n={G.n} exceeds "
                               f"the limit {limit} (set KDENSE_ORACLE_LIMIT to change)")


def _edge_counts(G: Graph) -> np.ndarray:
    """Induced edge count of every vertex subset, indexed by bitmask."""
    n = G.n
    counts = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        lower = np.arange(1 << v, dtype=np.int64)
        nbr_mask = sum(1 << u for u in G.adjacency[v] if u < v)
        counts[1 << v: 1 << (v + 1)] = counts[: 1 << v] + np.bitwise_count(lower & nbr_mask)
    return counts


def subset_keys(G: Graph) -> tuple[np.ndarray, np.ndarray, int]:
    """Integer density keys for every subset.

    Returns ``(keys, sizes, L)``; ``keys[mask] / L`` is the density of the
    subset encoded by ``mask`` and ``keys[0]`` is ``-1`` (the empty set).
    """
    n = G.n
    L = math.lcm(*range(1, n + 1)) if n else 1
    sizes = np.bitwise_count(np.arange(1 << n, dtype=np.int64)).astype(np.int64)
    keys = np.full(1 << n, -1, dtype=np.int64)
    nonempty = sizes > 0
    keys[nonempty] = _edge_counts(G)[nonempty] * (L // sizes[nonempty])
    return keys, sizes, L


def _mask_to_set(mask: int) -> VertexSet:
    return tuple(v for v in range(mask.bit_length()) if mask >> v & 1)


def oracle_topk_distinct(G: Graph, k: int) -> SolutionSet:
    """The ``k`` densest non-empty subsets, best first.

    Equal densities are ordered by bitmask value (the set ``S`` has mask
    ``sum(2**v for v in S)``).
    """
    check_k_feasible(G.n, k)
    _guard(G, DISTINCT_LIMIT, "oracle_topk_distinct")
    keys, _, _ = subset_keys(G)
    body = keys[1:]
    kth = np.partition(body, body.size - k)[body.size - k]
    above = np.nonzero(body > kth)[0] + 1
    above = above[np.lexsort((above, -keys[above]))]
    ties = np.nonzero(body == kth)[0][: k - above.size] + 1
    chosen = [int(x) for x in np.concatenate([above, ties])]
    return SolutionSet.from_sets(G, [_mask_to_set(x) for x in chosen], "oracle")


def _submasks_of(mask: int) -> np.ndarray:
    """All submasks of ``mask`` as an int64 array."""
    bits = [b for b in range(mask.bit_length()) if mask >> b & 1]
    sub = np.zeros(1, dtype=np.int64)
    for b in bits:
        sub = np.concatenate([sub, sub | (1 << b)])
    return sub


def oracle_disjoint(G: Graph, k: int) -> SolutionSet:
    """Exact maximum total density over ``k`` pairwise disjoint non-empty sets.

    Dynamic programme over bitmasks: ``best[j][M]`` is the best total of
    ``j`` disjoint sets inside ``M``.  Output sets are sorted canonically.
    """
    if k < 1 or k > 3:
        raise OracleLimitError(f"oracle_disjoint supports 1 <= k <= 3, got k={k}")
    if G.n < k:
        raise InfeasibleError(f"cannot pick {k} disjoint non-empty sets from {G.n} vertices")
    _guard(G, DISJOINT_LIMIT, "oracle_disjoint")
    n = G.n
    full = (1 << n) - 1
    keys, _, _ = subset_keys(G)
    neg = np.iinfo(np.int64).min // 4

    # best single set inside each mask (superset-max transform with argmax)
    best1 = keys.copy()
    best1[0] = neg
    arg1 = np.arange(1 << n, dtype=np.int64)
    for b in range(n):
        view = best1.reshape(-1, 2, 1 << b)
        aview = arg1.reshape(-1, 2, 1 << b)
        better = view[:, 0, :] > view[:, 1, :]
        view[:, 1, :] = np.where(better, view[:, 0, :], view[:, 1, :])
        aview[:, 1, :] = np.where(better, aview[:, 0, :], aview[:, 1, :])

    tables = [(best1, arg1)]
    for j in range(2, k):
        prev, _ = tables[-1]
        cur = np.full(1 << n, neg, dtype=np.int64)
        arg = np.zeros(1 << n, dtype=np.int64)
        for A in range(1, 1 << n):
            rest = _submasks_of(full ^ A)
            sub = prev[rest]
            vals = np.where(sub >= 0, keys[A] + sub, neg)
            M = rest | A
            upd = vals > cur[M]
            cur[M[upd]] = vals[upd]
            arg[M[upd]] = A
        tables.append((cur, arg))

    if k == 1:
        picks = [int(arg1[full])]
    else:
        prev, _ = tables[k - 2]
        A = np.arange(1, full + 1, dtype=np.int64)
        vals = keys[A] + prev[full ^ A]
        first = int(A[int(np.argmax(vals))])
        picks = [first]
        M = full ^ first
        for j in range(k - 1, 0, -1):
            _, arg = tables[j - 1]
            a = int(arg[M])
            picks.append(a)
            M ^= a
    sets = sorted(_mask_to_set(x) for x in picks)
    return SolutionSet.from_sets(G, sets, "oracle")


def oracle_overlap(G: Graph, k: int, alpha) -> SolutionSet:
    """Exact best pair of distinct sets sharing at most ``alpha*|Vi|`` vertices."""
    if k != 2:
        raise OracleLimitError(f"oracle_overlap only supports k=2, got k={k}")
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if G.n < 2:
        raise InfeasibleError("graph too small for two distinct subgraphs")
    _guard(G, OVERLAP_LIMIT, "oracle_overlap")
    p, q = alpha.numerator, alpha.denominator
    keys, sizes, _ = subset_keys(G)
    size_p = sizes * p
    best_val, best_pair = None, None
    for A in range(1, (1 << G.n) - 1):
        B = np.arange(A + 1, 1 << G.n, dtype=np.int64)
        shared = np.bitwise_count(B & A).astype(np.int64) * q
        ok = (shared <= size_p[A]) & (shared <= size_p[B])
        if not ok.any():
            continue
        vals = np.where(ok, keys[A] + keys[B], -1)
        i = int(np.argmax(vals))
        if vals[i] >= 0 and (best_val is None or vals[i] > best_val):
            best_val, best_pair = int(vals[i]), (A, int(B[i]))
    if best_pair is None:
        raise InfeasibleError(f"no feasible pair of subgraphs for alpha={alpha}")
    sets = sorted(_mask_to_set(x) for x in best_pair)
    return SolutionSet.from_sets(G, sets, "oracle")


def greedy_disjoint(G: Graph, k: int) -> SolutionSet:
    """Heuristic: take a densest subgraph of what is left, delete it, repeat.

    A pick that would leave fewer vertices than the picks still to come is
    shrunk by peeling minimum-degree vertices (smallest id first).  The
    output is always disjoint but carries no optimality guarantee.
    """
    if k < 1:
        raise InfeasibleError(f"k must be at least 1, got {k}")
    if G.n < k:
        raise InfeasibleError(f"cannot pick {k} disjoint non-empty sets from {G.n} vertices")
    remaining = set(range(G.n))
    picks = []
    for step in range(k):
        still_needed = k - step - 1
        S = set(densest_subgraph(G, within=remaining).vertices)
        while len(remaining) - len(S) < still_needed:
            S.discard(min_degree_vertex(G, S))
        picks.append(vertex_set(S))
        remaining -= S
    return SolutionSet.from_sets(G, picks, "greedy")
