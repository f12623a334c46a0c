"""
File: link_graph.py

Description:
    Link graphs: one link-node per edge of the original graph, link-nodes joined
    by weighted edges. The link-space graph joins every pair of edges sharing an
    endpoint; the link-skein graph keeps only the pairs that close a triangle.
    Both weight a link edge {v_ik, v_jk} with the closed-neighborhood similarity
    of the non-shared endpoints i and j.
"""

from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..errors import DomainError
from ..graph import Graph
from .similarity import closed_neighborhood_similarity


class LinkMode(str, Enum):
    SPACE = "space"
    SKEIN = "skein"


class LinkGraph:
    def __init__(
        self,
        graph: Graph,
        mode: Union[LinkMode, str],
        edges: Sequence[Tuple[int, int]],
        weights: Sequence[float],
    ):
        """
        :param graph: the original graph; link-node ids follow the lexicographic order of its edges.
        :param mode: space or skein.
        :param edges: link-graph edges as pairs of link-node ids.
        :param weights: one weight in (0, 1] per link-graph edge, parallel with edges.
        """
        if len(edges) != len(weights):
            raise DomainError("edges and weights must be parallel")
        self.graph = graph
        self.mode = LinkMode(mode)
        self.endpoints: Tuple[Tuple[int, int], ...] = tuple(graph.edges())
        self._index: Dict[Tuple[int, int], int] = {
            pair: v for v, pair in enumerate(self.endpoints)
        }
        node_count = len(self.endpoints)

        normalized = []
        for (a, b), w in zip(edges, weights):
            if a == b:
                raise DomainError(f"link-graph self-loop on link-node {a}")
            if not (0 <= a < node_count and 0 <= b < node_count):
                raise DomainError(f"link-node id out of range in edge ({a}, {b})")
            if not 0.0 < w <= 1.0:
                raise DomainError(f"link-graph weights must lie in (0, 1], got {w}")
            normalized.append((min(a, b), max(a, b), float(w)))
        normalized.sort()
        for prev, cur in zip(normalized, normalized[1:]):
            if prev[:2] == cur[:2]:
                raise DomainError(f"duplicate link-graph edge {cur[:2]}")

        self.edge_endpoints = np.array(
            [(a, b) for a, b, _ in normalized], dtype=np.int64
        ).reshape(-1, 2)
        self.edge_weights = np.array([w for _, _, w in normalized], dtype=np.float64)
        self.edge_weights.setflags(write=False)

        neighbors: List[List[Tuple[int, int]]] = [[] for _ in range(node_count)]
        for edge_id, (a, b, _) in enumerate(normalized):
            neighbors[a].append((b, edge_id))
            neighbors[b].append((a, edge_id))
        self._neighbors: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(u for u, _ in sorted(nbrs)) for nbrs in neighbors
        )
        self._incident: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(e for _, e in sorted(nbrs)) for nbrs in neighbors
        )

    @property
    def node_count(self) -> int:
        return len(self.endpoints)

    @property
    def edge_count(self) -> int:
        return len(self.edge_weights)

    def nodes(self) -> range:
        return range(len(self.endpoints))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._neighbors[v]

    def incident_edges(self, v: int) -> Tuple[int, ...]:
        """Edge ids incident to v, parallel with neighbors(v)."""
        return self._incident[v]

    def link_node(self, i: int, j: int) -> int:
        """Id of the link-node standing for the original edge {i, j}."""
        pair = (i, j) if i < j else (j, i)
        try:
            return self._index[pair]
        except KeyError:
            raise DomainError(f"({i}, {j}) is not an edge of the original graph") from None

    def link_node_label(self, v: int) -> str:
        i, j = self.endpoints[v]
        return f"{self.graph.label(i)},{self.graph.label(j)}"

    @property
    def max_weight(self) -> float:
        return float(self.edge_weights.max()) if self.edge_count else 0.0

    def weighted_edges(self) -> Iterable[Tuple[int, int, float]]:
        for (a, b), w in zip(self.edge_endpoints.tolist(), self.edge_weights.tolist()):
            yield a, b, w

    def core_link_nodes(self, nodes: Iterable[int]) -> FrozenSet[int]:
        """Link-nodes whose two endpoints both lie in the given original node set."""
        nodes = frozenset(nodes)
        return frozenset(
            v for v, (i, j) in enumerate(self.endpoints) if i in nodes and j in nodes
        )

    def __repr__(self):
        return (
            f"LinkGraph(mode={self.mode.value}, link_nodes={self.node_count}, "
            f"edges={self.edge_count})"
        )


def build_link_skein(g: Graph) -> LinkGraph:
    """
    For every edge {u, v} and every common neighbor w, join v_uw and v_vw with
    weight sim(u, v). Each triangle of g therefore contributes three link edges.
    """
    index = {pair: v for v, pair in enumerate(g.edges())}
    edges = []
    weights = []
    for u, v in index:
        common = g.neighbor_set(u) & g.neighbor_set(v)
        if not common:
            continue
        sim = closed_neighborhood_similarity(g, u, v)
        for w in sorted(common):
            l1 = index[(u, w) if u < w else (w, u)]
            l2 = index[(v, w) if v < w else (w, v)]
            edges.append((l1, l2))
            weights.append(sim)
    return LinkGraph(g, LinkMode.SKEIN, edges, weights)


def build_link_space(g: Graph) -> LinkGraph:
    """Join every pair of edges sharing an endpoint; weight by the non-shared endpoints."""
    index = {pair: v for v, pair in enumerate(g.edges())}
    edges = []
    weights = []
    for center in g.nodes():
        for a, b in combinations(g.neighbors(center), 2):
            edges.append(
                (
                    index[(center, a) if center < a else (a, center)],
                    index[(center, b) if center < b else (b, center)],
                )
            )
            weights.append(closed_neighborhood_similarity(g, a, b))
    return LinkGraph(g, LinkMode.SPACE, edges, weights)


def build_link_graph(g: Graph, mode: Union[LinkMode, str] = LinkMode.SKEIN) -> LinkGraph:
    if LinkMode(mode) == LinkMode.SKEIN:
        return build_link_skein(g)
    return build_link_space(g)
