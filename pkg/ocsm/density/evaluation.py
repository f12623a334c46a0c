import sys
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from ..graph import Graph
from ..link_graph import restore
from .link_density import member_contributions, ratio_bound
from .solution import Solution


@dataclass
class DensityReport:
    link_density: float
    member_densities: List[float] = field(default_factory=list)
    w_max: float = 0.0
    # w_max / link_density; a heuristic indicator, not a proven bound
    ratio_bound: Optional[float] = None
    modularity: float = 0.0
    mean_conductance: float = 0.0

    def as_dict(self) -> dict:
        return {
            "link_density": self.link_density,
            "member_densities": list(self.member_densities),
            "w_max": self.w_max,
            "ratio_bound": self.ratio_bound,
            "ratio_bound_is_heuristic": True,
            "modularity": self.modularity,
            "mean_conductance": self.mean_conductance,
        }


def modularity_eval(g: Graph, sol: Solution) -> float:
    """
    Newman modularity of the partition putting every node in the first member that
    covers it; uncovered nodes form singleton communities.
    """
    m = g.edge_count
    if m == 0:
        return 0.0
    n = g.node_count
    community = np.full(n, -1, dtype=np.int64)
    for index, member in enumerate(sol.members):
        if not member.nodes:
            continue
        for v in restore(member):
            if community[v] < 0:
                community[v] = index
    uncovered = np.flatnonzero(community < 0)
    community[uncovered] = len(sol.members) + np.arange(len(uncovered))

    community_count = int(community.max()) + 1
    internal = np.zeros(community_count, dtype=np.float64)
    for u, v in g.edges():
        if community[u] == community[v]:
            internal[community[u]] += 1
    degree_sums = np.bincount(community, weights=g.degrees(), minlength=community_count)
    return float((internal / m - (degree_sums / (2.0 * m)) ** 2).sum())


def conductance_eval(g: Graph, sol: Solution) -> float:
    """
    Mean over members of 1 - cut(S) / min(vol(S), vol(V - S)) with S = R(member),
    on the unweighted original graph. Members covering every node are skipped.
    """
    degrees = g.degrees()
    total_volume = int(degrees.sum())
    scores = []
    for index, member in enumerate(sol.members):
        s = restore(member)
        if len(s) == g.node_count:
            print(
                f"Warning: member {index} covers the whole graph, skipping it for conductance",
                file=sys.stderr,
            )
            continue
        volume = int(degrees[list(s)].sum())
        cut = sum(1 for v in s for u in g.neighbors(v) if u not in s)
        denominator = min(volume, total_volume - volume)
        conductance = cut / denominator if denominator > 0 else 0.0
        scores.append(1.0 - conductance)
    return float(np.mean(scores)) if scores else 0.0


def evaluate(g: Graph, sol: Solution) -> DensityReport:
    densities = member_contributions(sol)
    gamma = float(sum(densities))
    return DensityReport(
        link_density=gamma,
        member_densities=densities,
        w_max=sol.link_graph.max_weight,
        ratio_bound=ratio_bound(sol.link_graph, gamma) if gamma > 0 else None,
        modularity=modularity_eval(g, sol),
        mean_conductance=conductance_eval(g, sol),
    )
