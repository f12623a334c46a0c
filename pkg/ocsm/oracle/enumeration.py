"""
File: enumeration.py

Description:
    Exhaustive enumeration of the connected node sets whose induced subgraph has
    minimum degree >= k, for graphs small enough to hold as bitmasks. Each set is
    found exactly once by branching on "contains u / does not contain u" from a
    seed that is the set's smallest node. Branches are cut when the k-core of the
    still reachable nodes drops a required node or splits the required nodes.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional

from ..errors import DomainError, OracleLimitError
from ..graph import Graph, NodeSet, k_core
from .oracle_config import OracleLimitsModel


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _BitGraph:
    __slots__ = ("adjacency",)

    def __init__(self, g: Graph):
        self.adjacency = [0] * g.node_count
        for u, v in g.edges():
            self.adjacency[u] |= 1 << v
            self.adjacency[v] |= 1 << u

    def core(self, mask: int, k: int) -> int:
        adjacency = self.adjacency
        changed = True
        while changed:
            changed = False
            for v in _bits(mask):
                if (adjacency[v] & mask).bit_count() < k:
                    mask &= ~(1 << v)
                    changed = True
        return mask

    def component(self, mask: int, start: int) -> int:
        adjacency = self.adjacency
        reached = start
        frontier = start
        while frontier:
            grown = 0
            for v in _bits(frontier):
                grown |= adjacency[v]
            frontier = grown & mask & ~reached
            reached |= frontier
        return reached

    def neighborhood(self, mask: int) -> int:
        reached = 0
        for v in _bits(mask):
            reached |= self.adjacency[v]
        return reached


def _enumerate(
    g: Graph, k: int, limits: OracleLimitsModel, candidates: List[NodeSet]
):
    if g.node_count > limits.max_graph_nodes:
        raise OracleLimitError(
            f"graph has {g.node_count} nodes, the oracle accepts at most {limits.max_graph_nodes}"
        )
    bit_graph = _BitGraph(g)
    core_mask = 0
    for v in k_core(g, k):
        core_mask |= 1 << v

    for v in _bits(core_mask):
        higher = core_mask & ~((1 << (v + 1)) - 1)
        stack = [(1 << v, higher)]
        while stack:
            required, optional = stack.pop()
            reachable = bit_graph.core(required | optional, k)
            if reachable & required != required:
                continue
            reachable = bit_graph.component(reachable, required & -required)
            if reachable & required != required:
                continue
            optional = reachable & ~required
            if not optional:
                candidates.append(frozenset(_bits(required)))
                if len(candidates) > limits.max_candidates:
                    raise OracleLimitError(
                        f"more than {limits.max_candidates} feasible subgraphs",
                        partial_count=len(candidates),
                    )
                continue
            touching = optional & bit_graph.neighborhood(required)
            u = touching & -touching
            # exclude branch first so the include branch is expanded next
            stack.append((required, optional & ~u))
            stack.append((required | u, optional & ~u))


def enumerate_feasible_subgraphs(
    g: Graph, k: int, limits: Optional[OracleLimitsModel] = None
) -> List[NodeSet]:
    """
    :return: every connected node set S with min_degree(G[S]) >= k, ordered by size
        then by sorted node ids.
    """
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    limits = limits or OracleLimitsModel()
    candidates: List[NodeSet] = []
    _enumerate(g, k, limits, candidates)
    candidates.sort(key=lambda s: (len(s), sorted(s)))
    return candidates


@dataclass
class ThresholdCounts:
    k: int
    counts: Dict[int, int]
    reference_count: Optional[int] = None

    @property
    def matching_thresholds(self) -> List[int]:
        if self.reference_count is None:
            return []
        return [d for d, count in sorted(self.counts.items()) if count == self.reference_count]

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "counts": {f"min_degree>={d}": c for d, c in sorted(self.counts.items())},
            "reference_count": self.reference_count,
            "matching_thresholds": self.matching_thresholds,
        }


def threshold_counts(
    g: Graph,
    k: int,
    limits: Optional[OracleLimitsModel] = None,
    reference_count: Optional[int] = None,
    known_counts: Optional[Dict[int, int]] = None,
) -> ThresholdCounts:
    """
    Candidate counts for minimum degree >= k and >= k + 1, the two readings of a
    "minimum degree k" filter. A graph with no (k + 1)-core counts zero there.
    Thresholds present in known_counts are not enumerated again.
    """
    counts = {}
    for d in (k, k + 1):
        if known_counts is not None and d in known_counts:
            counts[d] = known_counts[d]
        else:
            counts[d] = len(enumerate_feasible_subgraphs(g, d, limits)) if k_core(g, d) else 0
    return ThresholdCounts(k=k, counts=counts, reference_count=reference_count)
