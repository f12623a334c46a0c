"""
File: densest.py

Description:
    Goldberg's densest-subgraph search on a weighted link graph. For a guess g the
    network source -> v (capacity d_w(v)), u <-> v (capacity w(u, v)) and
    v -> sink (capacity 2g) has a cut below 2W exactly when some set S has
    w(E(S)) / |S| > g, and the source side of a minimum cut is such a set.
    Binary search on g narrows to the maximum density.
"""

from typing import Dict, Iterable, List, Optional

from ..density import weighted_subgraph_density
from ..errors import DomainError
from ..link_graph import EffectiveWeights, LinkGraph, LinkSubgraph, link_components
from .flow_network import FlowNetwork, min_st_cut

MAX_SEARCH_ITERATIONS = 64
SEARCH_TOLERANCE = 1e-9


def goldberg_densest(
    lg: LinkGraph,
    restrict: Optional[Iterable[int]] = None,
    weights: Optional[EffectiveWeights] = None,
) -> LinkSubgraph:
    """
    Maximum-density link-subgraph of lg[restrict] under the given weights.

    Only positive-weight edges count. The result is narrowed to a single
    positive-weight component, so it is connected whenever it has more than one
    link-node. With no positive edge at all the smallest link-node is returned.
    """
    nodes: List[int] = sorted(lg.nodes() if restrict is None else set(restrict))
    if not nodes:
        raise DomainError("densest subgraph of an empty link-node set")
    values = lg.edge_weights if weights is None else weights.values

    position: Dict[int, int] = {v: i for i, v in enumerate(nodes)}
    edges = []
    for v in nodes:
        for u, e in zip(lg.neighbors(v), lg.incident_edges(v)):
            if u > v and u in position and values[e] > 0:
                edges.append((position[v], position[u], float(values[e])))
    total_weight = sum(w for _, _, w in edges)
    if total_weight <= 0:
        return LinkSubgraph(lg, frozenset([nodes[0]]))

    degree = [0.0] * len(nodes)
    for a, b, w in edges:
        degree[a] += w
        degree[b] += w

    source, sink = len(nodes), len(nodes) + 1
    net = FlowNetwork(len(nodes) + 2, source, sink)
    for i, d in enumerate(degree):
        if d > 0:
            net.add_arc(source, i, d)
    for a, b, w in edges:
        net.add_edge(a, b, w)
    sink_arcs = [net.add_arc(i, sink, 0.0) for i in range(len(nodes))]

    best = frozenset(i for i, d in enumerate(degree) if d > 0)
    lo, hi = 0.0, total_weight
    tolerance = SEARCH_TOLERANCE * max(1.0, total_weight)
    for _ in range(MAX_SEARCH_ITERATIONS):
        if hi - lo < tolerance:
            break
        guess = (lo + hi) / 2.0
        for arc in sink_arcs:
            net.set_capacity(arc, 2.0 * guess)
        cut, side = min_st_cut(net)
        found = side - {source}
        if found and cut < 2.0 * total_weight - 1e-10 * max(1.0, total_weight):
            lo = guess
            best = frozenset(found)
        else:
            hi = guess

    densest = LinkSubgraph(lg, frozenset(nodes[i] for i in best))
    return _densest_component(densest, weights)


def _densest_component(
    h: LinkSubgraph, weights: Optional[EffectiveWeights]
) -> LinkSubgraph:
    components = link_components(h.link_graph, h.nodes, weights)
    if len(components) == 1:
        return h
    best = None
    best_density = -1.0
    # components come ordered by smallest member, so strict > keeps the smallest on ties
    for component in components:
        candidate = LinkSubgraph(h.link_graph, component)
        density = weighted_subgraph_density(candidate, weights)
        if density > best_density:
            best, best_density = candidate, density
    return best
