import time
from typing import List, Optional, Sequence

import numpy as np

from ..density import MarginalDensity, Solution, member_contributions
from ..errors import DomainError, FeasibilityError
from ..graph import Graph, NodeSet, max_coreness
from ..link_graph import LinkGraph, LinkSubgraph, build_link_skein
from ..miners import MinerDiagnostics, MinerOutcome
from .enumeration import enumerate_feasible_subgraphs
from .oracle_config import OracleLimitsModel


def greedy_top_t(candidates: Sequence[LinkSubgraph], t: int) -> List[LinkSubgraph]:
    """
    Picks up to t distinct candidates one at a time, each maximizing the link-density
    of the selection so far. Ties go to the earlier candidate.
    """
    if t < 1:
        raise DomainError(f"t must be a positive integer, got {t}")
    if not candidates:
        return []
    lg = candidates[0].link_graph
    edges = [c.induced_edges() for c in candidates]
    sizes = [len(c) for c in candidates]
    remaining = list(range(len(candidates)))
    chosen: List[LinkSubgraph] = []
    while len(chosen) < t and remaining:
        marginal = MarginalDensity(Solution(lg, chosen))
        best_index = None
        best_value = -np.inf
        for index in remaining:
            value = marginal.density_with(edges[index], sizes[index])
            if value > best_value:
                best_index, best_value = index, value
        remaining.remove(best_index)
        chosen.append(candidates[best_index])
    return chosen


class _CombinationSearch:
    """
    Branch and bound over t-subsets of candidates. Occurrence discounting only
    lowers contributions, so the sum of undiscounted member densities bounds the
    link-density of any completion.
    """

    def __init__(self, lg: LinkGraph, candidates: Sequence[LinkSubgraph], t: int):
        self.weights = lg.edge_weights
        self.edges = [c.induced_edges() for c in candidates]
        self.sizes = [len(c) for c in candidates]
        densities = np.array(
            [self.weights[e].sum() / s for e, s in zip(self.edges, self.sizes)],
            dtype=np.float64,
        )
        self.order = sorted(range(len(candidates)), key=lambda i: (-densities[i], i))
        self.sorted_densities = densities[self.order]
        self.size = min(t, len(candidates))
        self.occurrence = np.zeros(lg.edge_count, dtype=np.int64)
        self.best_value = -np.inf
        self.best: List[int] = []
        self.evaluated = 0

    def evaluate(self, selection: Sequence[int]) -> float:
        occurrence = np.zeros_like(self.occurrence)
        for i in selection:
            occurrence[self.edges[i]] += 1
        return float(
            sum(
                (self.weights[self.edges[i]] / occurrence[self.edges[i]]).sum() / self.sizes[i]
                for i in selection
            )
        )

    def offer(self, selection: Sequence[int]):
        self.evaluated += 1
        value = self.evaluate(selection)
        if value > self.best_value + 1e-12:
            self.best_value = value
            self.best = list(selection)

    def run(self, incumbent: Sequence[int]) -> List[int]:
        self.offer(incumbent)
        self._search(0, [], 0.0)
        return self.best

    def _search(self, start: int, chosen: List[int], bound_so_far: float):
        if len(chosen) == self.size:
            self.offer(chosen)
            return
        missing = self.size - len(chosen)
        for position in range(start, len(self.order) - missing + 1):
            bound = bound_so_far + float(self.sorted_densities[position : position + missing].sum())
            if bound <= self.best_value + 1e-12:
                break
            chosen.append(self.order[position])
            self._search(position + 1, chosen, bound_so_far + float(self.sorted_densities[position]))
            chosen.pop()
def exact_top_t(
    g: Graph,
    k: int,
    t: int,
    limits: Optional[OracleLimitsModel] = None,
    link_graph: Optional[LinkGraph] = None,
    node_sets: Optional[List[NodeSet]] = None,
) -> MinerOutcome:
    """
    Best selection of t distinct feasible subgraphs, each taken with all of its
    induced edges. Exhaustive while the candidate count stays within
    limits.exact_combination_limit, greedy beyond.

    A member that leaves out an edge of G[S] is outside this candidate set, so a
    miner returning such a member can score above the result.

    :param node_sets: the output of enumerate_feasible_subgraphs for (g, k), when
        the caller already has it.
    """
    if t < 1:
        raise DomainError(f"t must be a positive integer, got {t}")
    limits = limits or OracleLimitsModel()
    timings = {}

    if node_sets is None:
        start = time.perf_counter()
        node_sets = enumerate_feasible_subgraphs(g, k, limits)
        timings["enumeration"] = time.perf_counter() - start
    if not node_sets:
        raise FeasibilityError(k, max_coreness(g))

    if link_graph is None:
        start = time.perf_counter()
        link_graph = build_link_skein(g)
        timings["link_graph"] = time.perf_counter() - start
    candidates = [LinkSubgraph(link_graph, link_graph.core_link_nodes(s)) for s in node_sets]

    start = time.perf_counter()
    greedy = greedy_top_t(candidates, t)
    iterations = len(greedy)
    members = greedy
    if len(candidates) <= limits.exact_combination_limit:
        position = {id(c): i for i, c in enumerate(candidates)}
        search = _CombinationSearch(link_graph, candidates, t)
        best = search.run([position[id(c)] for c in greedy])
        members = [candidates[i] for i in best]
        iterations = search.evaluated
    timings["selection"] = time.perf_counter() - start

    solution = Solution(link_graph, members)
    return MinerOutcome(
        solution=solution,
        complete=len(members) == t,
        diagnostics=MinerDiagnostics(
            member_contributions=member_contributions(solution),
            iterations=iterations,
            timings=timings,
        ),
    )
