"""
File: seed_expansion.py

Description:
    The seed-expansion miner. A seed is the densest link-subgraph under the
    current effective weights; it is grown through its link-graph frontier until
    every original node it covers occurs at least k times. Accepted members have
    their internal weights zeroed so the next seed lands elsewhere.
"""

from collections import Counter
from typing import Dict, FrozenSet, Iterable, Optional, Set

from ..errors import DomainError
from ..flow import goldberg_densest
from ..link_graph import EffectiveWeights, LinkGraph, LinkSubgraph
from .miner import Miner, register_miner
from .miner_config import ExpansionStrategy, MinerConfigModel


def _min_occurrence_gain(occurrence: Counter, minimum: int, at_minimum: int, i: int, j: int) -> int:
    """Increase of the minimum occurrence after adding the edge {i, j}."""
    lifted = (occurrence[i] == minimum) + (occurrence[j] == minimum)
    new_minimum = minimum + 1 if lifted == at_minimum else minimum
    if occurrence[i] == 0 or occurrence[j] == 0:
        new_minimum = min(new_minimum, 1)
    return new_minimum - minimum


def sea_expand(
    seed: LinkSubgraph,
    lg: LinkGraph,
    config: MinerConfigModel,
    restrict: Optional[Iterable[int]] = None,
) -> LinkSubgraph:
    """
    Grows seed one frontier link-node at a time until its minimum occurrence reaches
    config.k.

    li picks the frontier node with the most link-graph edges into the current set.
    lg picks the one raising the minimum occurrence the most, then the most
    connected. Remaining ties go to the smallest link-node id.

    :return: the expanded link-subgraph, or an empty one when the frontier runs dry
        or the size would exceed the expansion cap.
    """
    if not seed.nodes:
        raise DomainError("cannot expand an empty seed")
    k = config.k
    cap = config.expansion_cap if config.expansion_cap is not None else lg.node_count
    allowed: Optional[FrozenSet[int]] = None if restrict is None else frozenset(restrict)
    endpoints = lg.endpoints

    current: Set[int] = set(seed.nodes)
    occurrence: Counter = Counter()
    for v in current:
        occurrence.update(endpoints[v])
    connections: Dict[int, int] = {}

    def absorb(v: int):
        for u in lg.neighbors(v):
            if u not in current and (allowed is None or u in allowed):
                connections[u] = connections.get(u, 0) + 1

    for v in current:
        absorb(v)
    failure = LinkSubgraph(lg, frozenset())

    while True:
        minimum = min(occurrence.values())
        if minimum >= k:
            return LinkSubgraph(lg, frozenset(current))
        if not connections or len(current) + 1 > cap:
            return failure

        if config.expansion_strategy == ExpansionStrategy.LI:
            chosen = min(connections, key=lambda u: (-connections[u], u))
        else:
            at_minimum = sum(1 for count in occurrence.values() if count == minimum)
            chosen = min(
                connections,
                key=lambda u: (
                    -_min_occurrence_gain(occurrence, minimum, at_minimum, *endpoints[u]),
                    -connections[u],
                    u,
                ),
            )

        del connections[chosen]
        current.add(chosen)
        occurrence.update(endpoints[chosen])
        absorb(chosen)


@register_miner("sea")
class SeedExpansionMiner(Miner):
    def _search(self, lg, restrict):
        config = self.config
        weights = EffectiveWeights(lg)
        working = set(restrict)
        accepted = []
        accepted_sets = set()
        iterations = 0

        while len(accepted) < config.t and working and iterations < config.outer_iteration_limit:
            iterations += 1
            seed = goldberg_densest(lg, working, weights)
            member = sea_expand(seed, lg, config, restrict)
            if not member.nodes or member.nodes in accepted_sets:
                working -= seed.nodes
                continue
            accepted.append(member)
            accepted_sets.add(member.nodes)
            weights.zero_out(member)

        return accepted, iterations
