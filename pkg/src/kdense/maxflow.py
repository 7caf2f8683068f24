"""Integer maximum flow / minimum s-t cut.

The kernel is Dinic's blocking-flow algorithm over a residual graph stored
in flat lists (arc ``i`` and its reverse ``i ^ 1``).  Capacities are plain
Python integers, so there is no wrap-around; non-integer or negative
capacities are rejected up front.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

__all__ = ["FlowNetwork", "FlowError", "max_flow_min_cut", "cut_capacity"]


class FlowError(ValueError):
    pass


@dataclass(frozen=True)
class FlowNetwork:
    """Directed network with integer arc capacities.

    ``arcs`` is a sequence of ``(tail, head, capacity)`` triples over nodes
    ``0 .. n_nodes-1``.  Parallel arcs are allowed.
    """

    n_nodes: int
    arcs: tuple[tuple[int, int, int], ...]
    source: int
    sink: int

    def __post_init__(self):
        if self.source == self.sink:
            raise FlowError("source and sink must differ")
        for node in (self.source, self.sink):
            if not 0 <= node < self.n_nodes:
                raise FlowError(f"terminal {node} outside [0, {self.n_nodes})")
        arcs = tuple((int(a), int(b), c) for a, b, c in self.arcs)
        for a, b, c in arcs:
            if not (0 <= a < self.n_nodes and 0 <= b < self.n_nodes):
                raise FlowError(f"arc ({a}, {b}) has an endpoint outside the network")
            if isinstance(c, bool) or not isinstance(c, int):
                raise FlowError(f"capacity {c!r} on arc ({a}, {b}) is not an integer")
            if c < 0:
                raise FlowError(f"negative capacity {c} on arc ({a}, {b})")
        object.__setattr__(self, "arcs", arcs)


def cut_capacity(net: FlowNetwork, source_side: Iterable[int]) -> int:
    """Total capacity of arcs leaving ``source_side``."""
    side = set(source_side)
    return sum(c for a, b, c in net.arcs if a in side and b not in side)


def max_flow_min_cut(net: FlowNetwork) -> tuple[int, frozenset[int]]:
    """Maximum flow value and the minimal minimum-cut source side.

    The source side returned is the set of nodes reachable from the source
    in the final residual graph, i.e. the inclusion-minimal source side
    among all minimum cuts.
    """
    n = net.n_nodes
    s, t = net.source, net.sink
    head: list[int] = []
    cap: list[int] = []
    out: list[list[int]] = [[] for _ in range(n)]
    for a, b, c in net.arcs:
        if a == b:
            continue
        out[a].append(len(head))
        head.append(b)
        cap.append(c)
        out[b].append(len(head))
        head.append(a)
        cap.append(0)

    flow = 0
    while True:
        level = _bfs_levels(n, s, out, head, cap)
        if level[t] < 0:
            break
        flow += _blocking_flow(s, t, out, head, cap, level)

    reach = _bfs_levels(n, s, out, head, cap)
    return flow, frozenset(v for v in range(n) if reach[v] >= 0)


def _bfs_levels(n, s, out, head, cap):
    level = [-1] * n
    level[s] = 0
    queue = deque([s])
    while queue:
        v = queue.popleft()
        nxt = level[v] + 1
        for e in out[v]:
            if cap[e] > 0:
                u = head[e]
                if level[u] < 0:
                    level[u] = nxt
                    queue.append(u)
    return level


def _blocking_flow(s, t, out, head, cap, level):
    """Saturate every shortest augmenting path (iterative DFS)."""
    ptr = [0] * len(out)
    total = 0
    path: list[int] = []  # arc ids from s to the current node
    v = s
    while True:
        if v == t:
            push = min(cap[e] for e in path)
            for e in path:
                cap[e] -= push
                cap[e ^ 1] += push
            total += push
            # restart from the tail of the first saturated arc
            for i, e in enumerate(path):
                if cap[e] == 0:
                    del path[i:]
                    break
            v = head[path[-1]] if path else s
            continue
        arcs = out[v]
        advanced = False
        while ptr[v] < len(arcs):
            e = arcs[ptr[v]]
            u = head[e]
            if cap[e] > 0 and level[u] == level[v] + 1:
                path.append(e)
                v = u
                advanced = True
                break
            ptr[v] += 1
        if advanced:
            continue
        if v == s:
            return total
        # dead end: retreat and skip the arc that led here
        level[v] = -1
        path.pop()
        v = head[path[-1]] if path else s
        ptr[v] += 1
