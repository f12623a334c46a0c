"""
File: peeling.py

Description:
    Cascading peeling of link-subgraphs down to the minimum-occurrence constraint
    and the baseline peeling miner built on it. Every original node whose
    occurrence drops below k takes all its remaining link-nodes with it, which
    may push further nodes below k. The surviving set is the k-core of the graph
    formed by the chosen edges, so the result does not depend on removal order.
"""

from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, List, Tuple

from ..density import weighted_subgraph_density
from ..errors import DomainError
from ..link_graph import LinkGraph, LinkSubgraph, link_components
from .miner import Miner, register_miner


def _peel(lg: LinkGraph, nodes: Iterable[int], k: int) -> FrozenSet[int]:
    endpoints = lg.endpoints
    alive = set(nodes)
    incident: Dict[int, List[int]] = defaultdict(list)
    for v in alive:
        for i in endpoints[v]:
            incident[i].append(v)
    occurrence = {i: len(link_nodes) for i, link_nodes in incident.items()}

    stack = [i for i, count in occurrence.items() if count < k]
    while stack:
        i = stack.pop()
        for v in incident[i]:
            if v not in alive:
                continue
            alive.remove(v)
            for j in endpoints[v]:
                occurrence[j] -= 1
                # only the transition k -> k-1 enqueues, so each node is peeled once
                if j != i and occurrence[j] == k - 1:
                    stack.append(j)
    return frozenset(alive)


def peel_to_feasible(h: LinkSubgraph, k: int) -> LinkSubgraph:
    """
    Largest subset of h with minimum occurrence >= k; empty when none exists.
    """
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    return LinkSubgraph(h.link_graph, _peel(h.link_graph, h.nodes, k))


def feasible_components(lg: LinkGraph, nodes: Iterable[int], k: int) -> List[FrozenSet[int]]:
    """
    Split nodes into link-connected pieces that each satisfy the minimum-occurrence
    constraint on their own. A piece cut off from its component can lose
    occurrences it shared with a sibling, so pieces are peeled again until stable.
    Ordered by smallest member.
    """
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    result = []
    stack = [frozenset(nodes)]
    while stack:
        peeled = _peel(lg, stack.pop(), k)
        if not peeled:
            continue
        components = link_components(lg, peeled)
        if len(components) == 1:
            result.append(peeled)
        else:
            stack.extend(components)
    return sorted(result, key=min)


def rank_by_density(lg: LinkGraph, candidates: Iterable[FrozenSet[int]]) -> List[Tuple[float, FrozenSet[int]]]:
    ranked = [
        (weighted_subgraph_density(LinkSubgraph(lg, c)), c) for c in candidates
    ]
    ranked.sort(key=lambda pair: (-pair[0], min(pair[1])))
    return ranked


@register_miner("pa")
class PeelingMiner(Miner):
    """
    Peels the link-nodes of the k-core to feasible components and keeps the t
    densest. The components are pairwise disjoint, so no overlap discount applies.
    """

    def _search(self, lg, restrict):
        ranked = rank_by_density(lg, feasible_components(lg, restrict, self.config.k))
        return [LinkSubgraph(lg, c) for _, c in ranked[: self.config.t]], 1
