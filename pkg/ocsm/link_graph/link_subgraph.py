from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator

import numpy as np

from ..errors import DomainError
from ..graph import NodeSet
from .link_graph import LinkGraph


@dataclass(frozen=True)
class LinkSubgraph:
    """A set of link-nodes of one LinkGraph; the unit candidate solution."""

    link_graph: LinkGraph = field(compare=False, repr=False)
    nodes: FrozenSet[int]

    def __post_init__(self):
        nodes = frozenset(self.nodes)
        node_count = self.link_graph.node_count
        for v in nodes:
            if not 0 <= v < node_count:
                raise DomainError(f"link-node id {v} out of range")
        object.__setattr__(self, "nodes", nodes)

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.nodes))

    def __contains__(self, v) -> bool:
        return v in self.nodes

    def __bool__(self) -> bool:
        return bool(self.nodes)

    def induced_edges(self) -> np.ndarray:
        """Ids of the link-graph edges with both ends in this subgraph."""
        lg = self.link_graph
        nodes = self.nodes
        edge_ids = []
        for v in nodes:
            for u, e in zip(lg.neighbors(v), lg.incident_edges(v)):
                if u > v and u in nodes:
                    edge_ids.append(e)
        edge_ids.sort()
        return np.asarray(edge_ids, dtype=np.int64)

    def labels(self) -> list:
        return [self.link_graph.link_node_label(v) for v in sorted(self.nodes)]


def _require_non_empty(h: LinkSubgraph, operation: str):
    if not h.nodes:
        raise DomainError(f"{operation} of an empty link-subgraph")


def restore(h: LinkSubgraph) -> NodeSet:
    """R(H): the original nodes covered by the link-nodes of h."""
    _require_non_empty(h, "restore")
    endpoints = h.link_graph.endpoints
    nodes = set()
    for v in h.nodes:
        nodes.update(endpoints[v])
    return frozenset(nodes)


def occurrence_profile(h: LinkSubgraph) -> Dict[int, int]:
    """Number of link-nodes of h incident to each original node of R(h)."""
    _require_non_empty(h, "occurrence_profile")
    endpoints = h.link_graph.endpoints
    counts = Counter()
    for v in h.nodes:
        i, j = endpoints[v]
        counts[i] += 1
        counts[j] += 1
    return dict(counts)


def min_occurrence(h: LinkSubgraph) -> int:
    """beta(H); beta(H) >= k certifies min degree >= k for G[R(H)]."""
    return min(occurrence_profile(h).values())


def r_connected(h: LinkSubgraph) -> bool:
    """True iff the original edges represented by h form a connected graph."""
    _require_non_empty(h, "r_connected")
    endpoints = h.link_graph.endpoints
    incident = {}
    for v in h.nodes:
        for i in endpoints[v]:
            incident.setdefault(i, []).append(v)
    start = next(iter(h.nodes))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for i in endpoints[v]:
            for u in incident[i]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return len(seen) == len(h.nodes)


def link_subgraph_from_labels(link_graph: LinkGraph, pairs: Iterable[str]) -> LinkSubgraph:
    """Rebuild a link-subgraph from "i,j" external-label pairs."""
    g = link_graph.graph
    nodes = []
    for pair in pairs:
        parts = pair.split(",")
        if len(parts) != 2:
            raise DomainError(f"link-node label must look like 'i,j', got {pair!r}")
        nodes.append(link_graph.link_node(g.node_id(parts[0]), g.node_id(parts[1])))
    return LinkSubgraph(link_graph, frozenset(nodes))
