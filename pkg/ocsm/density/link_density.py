"""
File: link_density.py

Description:
    The link-density objective. Each member contributes the sum of its induced
    edge weights divided by its size, every edge weight first divided by the
    number of members that induce that edge, so nested or repeated members earn
    less than disjoint ones.
"""

from typing import List, Optional

import numpy as np

from ..errors import DomainError
from ..link_graph import EffectiveWeights, LinkGraph, LinkSubgraph
from .solution import Solution


def _weight_values(lg: LinkGraph, weights: Optional[EffectiveWeights]) -> np.ndarray:
    return lg.edge_weights if weights is None else weights.values


def member_contributions(
    sol: Solution, weights: Optional[EffectiveWeights] = None
) -> List[float]:
    """Each member's term of the link-density, in member order."""
    w = _weight_values(sol.link_graph, weights)
    contributions = []
    for member, edge_ids in zip(sol.members, sol.member_edges):
        if not member.nodes:
            raise DomainError("link-density of a solution with an empty member")
        discounted = w[edge_ids] / sol.occurrence[edge_ids]
        contributions.append(float(discounted.sum()) / len(member))
    return contributions


def link_density(sol: Solution, weights: Optional[EffectiveWeights] = None) -> float:
    return float(sum(member_contributions(sol, weights)))


def weighted_subgraph_density(
    h: LinkSubgraph, weights: Optional[EffectiveWeights] = None
) -> float:
    """Sum of induced edge weights over |h|; the single-member link-density."""
    if not h.nodes:
        raise DomainError("density of an empty link-subgraph")
    w = _weight_values(h.link_graph, weights)
    return float(w[h.induced_edges()].sum()) / len(h)


def ratio_bound(lg: LinkGraph, result_density: float) -> float:
    """
    w_max / gamma(C), with w_max the largest link-graph edge weight. Reported as a
    heuristic indicator only; it is not a proven approximation guarantee.
    """
    if result_density <= 0:
        raise DomainError(f"ratio bound needs a positive density, got {result_density}")
    return lg.max_weight / result_density


class MarginalDensity:
    """
    Evaluates gamma(sol + T) for many candidates T without rebuilding the solution.

    For an edge e with occurrence O and S = sum of 1/|m| over members inducing e,
    adding T moves e's contribution from w*S/O to w*(S + 1/|T|)/(O + 1). So

        gamma(sol + T) = gamma(sol) + sum_{e in E(T)} a[e] + (1/|T|) * sum_{e in E(T)} b[e]

    with a = w*S/(O+1) - w*S/O (0 when O = 0) and b = w/(O+1).
    """

    def __init__(self, sol: Solution):
        lg = sol.link_graph
        w = lg.edge_weights
        inverse_sizes = np.zeros(lg.edge_count, dtype=np.float64)
        for member, edge_ids in zip(sol.members, sol.member_edges):
            inverse_sizes[edge_ids] += 1.0 / len(member)
        occurrence = sol.occurrence.astype(np.float64)
        base = np.divide(
            w * inverse_sizes,
            occurrence,
            out=np.zeros_like(inverse_sizes),
            where=occurrence > 0,
        )
        self.base_total = float(base.sum())
        self.a = w * inverse_sizes / (occurrence + 1.0) - base
        self.b = w / (occurrence + 1.0)

    def density_with(self, edge_ids: np.ndarray, size: int) -> float:
        if size <= 0:
            raise DomainError("cannot add an empty member")
        return self.base_total + float(self.a[edge_ids].sum()) + float(
            self.b[edge_ids].sum()
        ) / size

    def density_with_member(self, h: LinkSubgraph) -> float:
        return self.density_with(h.induced_edges(), len(h))
