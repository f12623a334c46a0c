from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional

import numpy as np

from ..errors import DomainError
from .effective_weights import EffectiveWeights
from .link_graph import LinkGraph


def link_components(
    lg: LinkGraph,
    restrict: Optional[Iterable[int]] = None,
    weights: Optional[EffectiveWeights] = None,
) -> List[FrozenSet[int]]:
    """
    Connected components of the link graph induced by restrict, ordered by smallest
    member. With weights given, only edges of positive effective weight connect.
    """
    allowed = set(lg.nodes()) if restrict is None else set(restrict)
    values = None if weights is None else weights.values
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
            for u, e in zip(lg.neighbors(v), lg.incident_edges(v)):
                if u in allowed and u not in seen and (values is None or values[e] > 0):
                    seen.add(u)
                    component.append(u)
                    queue.append(u)
        components.append(frozenset(component))
    return components


def similarity_histogram(lg: LinkGraph, bins: int = 10) -> np.ndarray:
    """Counts of link-graph edges per equal-width weight bin over [0, 1]."""
    if bins < 1:
        raise DomainError(f"bins must be positive, got {bins}")
    counts, _ = np.histogram(lg.edge_weights, bins=bins, range=(0.0, 1.0))
    return counts


@dataclass
class SimilarityComparison:
    bin_edges: np.ndarray
    space_counts: np.ndarray
    skein_counts: np.ndarray

    @property
    def difference(self) -> np.ndarray:
        return self.space_counts - self.skein_counts

    def as_rows(self) -> list:
        return [
            {
                "bin_low": float(lo),
                "bin_high": float(hi),
                "space": int(space),
                "skein": int(skein),
                "difference": int(space - skein),
            }
            for lo, hi, space, skein in zip(
                self.bin_edges[:-1],
                self.bin_edges[1:],
                self.space_counts,
                self.skein_counts,
            )
        ]


def compare_similarity_distributions(
    space: LinkGraph, skein: LinkGraph, bins: int = 10
) -> SimilarityComparison:
    """How many low-similarity link edges the skein prunes relative to the space graph."""
    if space.endpoints != skein.endpoints:
        raise DomainError("link graphs were built from different original graphs")
    return SimilarityComparison(
        bin_edges=np.linspace(0.0, 1.0, bins + 1),
        space_counts=similarity_histogram(space, bins),
        skein_counts=similarity_histogram(skein, bins),
    )


@dataclass
class LinkGraphStatistics:
    mode: str
    link_node_count: int
    edge_count: int
    average_degree: float
    component_count: int
    build_time: Optional[float] = None


def link_graph_statistics(lg: LinkGraph, build_time: Optional[float] = None) -> LinkGraphStatistics:
    return LinkGraphStatistics(
        mode=lg.mode.value,
        link_node_count=lg.node_count,
        edge_count=lg.edge_count,
        average_degree=(2.0 * lg.edge_count / lg.node_count) if lg.node_count else 0.0,
        component_count=len(link_components(lg)),
        build_time=build_time,
    )
