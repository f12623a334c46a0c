"""
File: core.py

Description:
    k-core machinery and basic structural queries on a Graph. Core numbers are
    computed with the bucket-based peeling of Batagelj and Zaversnik, linear in
    the number of edges.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from ..errors import DomainError
from .graph import Graph, NodeSet


def coreness(g: Graph) -> np.ndarray:
    """
    :return: array c with c[v] the largest k such that v belongs to the k-core.
    """
    n = g.node_count
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    deg = [g.degree(v) for v in range(n)]
    max_deg = max(deg)

    # bins[d] becomes the start of the block of nodes with current degree d in vert
    bins = [0] * (max_deg + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(max_deg + 1):
        count = bins[d]
        bins[d] = start
        start += count

    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bins[deg[v]]
        vert[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(max_deg, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0

    for i in range(n):
        v = vert[i]
        dv = deg[v]
        for u in g.neighbors(v):
            du = deg[u]
            if du > dv:
                pu = pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    pos[u] = pw
                    vert[pu] = w
                    pos[w] = pu
                    vert[pw] = u
                bins[du] += 1
                deg[u] = du - 1
    return np.asarray(deg, dtype=np.int64)


def max_coreness(g: Graph) -> int:
    core = coreness(g)
    return int(core.max()) if core.size else 0


def k_core(g: Graph, k: int) -> NodeSet:
    """The unique maximal node set whose induced subgraph has minimum degree >= k."""
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    core = coreness(g)
    return frozenset(np.flatnonzero(core >= k).tolist())


def connected_components(g: Graph, restrict: Optional[Iterable[int]] = None) -> List[NodeSet]:
    """
    Connected components of G[restrict] (the whole graph when restrict is None),
    ordered by their smallest member.
    """
    allowed = set(g.nodes()) if restrict is None else set(restrict)
    seen = set()
    components = []
    for root in sorted(allowed):
        if root in seen:
            continue
        seen.add(root)
        component = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u in allowed and u not in seen:
                    seen.add(u)
                    component.append(u)
                    queue.append(u)
        components.append(frozenset(component))
    return components


def is_connected(g: Graph, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return len(s) > 0 and len(connected_components(g, s)) == 1


def min_degree(g: Graph, s: Iterable[int]) -> int:
    """Minimum degree of the induced subgraph G[s]."""
    s = frozenset(s)
    if not s:
        raise DomainError("min_degree of an empty node set")
    return min(len(g.neighbor_set(v) & s) for v in s)


def count_triangles(g: Graph) -> int:
    total = 0
    for u in g.nodes():
        nbrs_u = g.neighbor_set(u)
        for v in g.neighbors(u):
            if v <= u:
                continue
            for w in nbrs_u & g.neighbor_set(v):
                if w > v:
                    total += 1
    return total


@dataclass
class GraphStatistics:
    node_count: int
    edge_count: int
    triangle_count: int
    max_coreness: int


def graph_statistics(g: Graph) -> GraphStatistics:
    return GraphStatistics(
        node_count=g.node_count,
        edge_count=g.edge_count,
        triangle_count=count_triangles(g),
        max_coreness=max_coreness(g),
    )
