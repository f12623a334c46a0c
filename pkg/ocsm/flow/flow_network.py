"""
File: flow_network.py

Description:
    A directed flow network with float capacities stored in flat arrays, paired
    residual arcs (arc a and a ^ 1) and an iterative Dinic max-flow. Capacities can
    be changed between runs so one network serves a whole parametric search.
"""

from collections import deque
from typing import FrozenSet, List, Tuple

from ..errors import DomainError


class FlowNetwork:
    __slots__ = ("node_count", "source", "sink", "_head", "_to", "_next", "_capacity")

    def __init__(self, node_count: int, source: int, sink: int):
        if source == sink:
            raise DomainError("source and sink must differ")
        for v in (source, sink):
            if not 0 <= v < node_count:
                raise DomainError(f"terminal {v} out of range for {node_count} nodes")
        self.node_count = node_count
        self.source = source
        self.sink = sink
        self._head: List[int] = [-1] * node_count
        self._to: List[int] = []
        self._next: List[int] = []
        self._capacity: List[float] = []

    @property
    def arc_count(self) -> int:
        return len(self._to)

    def _append_arc(self, u: int, v: int, capacity: float) -> int:
        arc = len(self._to)
        self._to.append(v)
        self._next.append(self._head[u])
        self._capacity.append(float(capacity))
        self._head[u] = arc
        return arc

    def add_arc(self, u: int, v: int, capacity: float, reverse_capacity: float = 0.0) -> int:
        """Adds u -> v and its residual twin; returns the id of u -> v."""
        if capacity < 0 or reverse_capacity < 0:
            raise DomainError("capacities must be non-negative")
        arc = self._append_arc(u, v, capacity)
        self._append_arc(v, u, reverse_capacity)
        return arc

    def add_edge(self, u: int, v: int, capacity: float) -> int:
        """An undirected edge: capacity in both directions."""
        return self.add_arc(u, v, capacity, capacity)

    def set_capacity(self, arc: int, capacity: float):
        if capacity < 0:
            raise DomainError("capacities must be non-negative")
        self._capacity[arc] = float(capacity)

    def capacity(self, arc: int) -> float:
        return self._capacity[arc]


def _levels(net: FlowNetwork, residual: List[float], eps: float) -> List[int]:
    level = [-1] * net.node_count
    level[net.source] = 0
    queue = deque([net.source])
    head, to, nxt = net._head, net._to, net._next
    while queue:
        u = queue.popleft()
        arc = head[u]
        while arc != -1:
            v = to[arc]
            if level[v] < 0 and residual[arc] > eps:
                level[v] = level[u] + 1
                queue.append(v)
            arc = nxt[arc]
    return level


def _blocking_flow(
    net: FlowNetwork, residual: List[float], level: List[int], eps: float
) -> float:
    head, to, nxt = net._head, net._to, net._next
    current = list(head)
    total = 0.0
    while True:
        # walk one augmenting path in the level graph
        path: List[int] = []
        u = net.source
        while u != net.sink:
            arc = current[u]
            while arc != -1:
                v = to[arc]
                if residual[arc] > eps and level[v] == level[u] + 1:
                    break
                arc = nxt[arc]
            current[u] = arc
            if arc == -1:
                if u == net.source:
                    return total
                level[u] = -1
                dead_arc = path.pop()
                u = to[dead_arc ^ 1]
                continue
            path.append(arc)
            u = to[arc]
        pushed = min(residual[arc] for arc in path)
        for arc in path:
            residual[arc] -= pushed
            residual[arc ^ 1] += pushed
        total += pushed


def max_flow(net: FlowNetwork) -> Tuple[float, List[float]]:
    """Dinic's algorithm from the configured capacities; returns (value, residual)."""
    residual = list(net._capacity)
    eps = 1e-12 * max(1.0, max(residual, default=0.0))
    value = 0.0
    while True:
        level = _levels(net, residual, eps)
        if level[net.sink] < 0:
            return value, residual
        value += _blocking_flow(net, residual, level, eps)


def min_st_cut(net: FlowNetwork) -> Tuple[float, FrozenSet[int]]:
    """
    :return: the minimum s-t cut value and the source side of the cut, i.e. the
        nodes reachable from the source in the final residual network.
    """
    value, residual = max_flow(net)
    eps = 1e-12 * max(1.0, max(net._capacity, default=0.0))
    level = _levels(net, residual, eps)
    return value, frozenset(v for v, lv in enumerate(level) if lv >= 0)
