from typing import Tuple

from ..errors import DomainError
from ..link_graph import LinkGraph, LinkMode, LinkSubgraph
from .link_density import weighted_subgraph_density


def _rebind(h: LinkSubgraph, lg: LinkGraph) -> LinkSubgraph:
    # link-node ids depend only on the original edge set, so they carry over between modes
    return h if h.link_graph is lg else LinkSubgraph(lg, h.nodes)


def free_rider_gap(
    space: LinkGraph, skein: LinkGraph, c: LinkSubgraph, opt: LinkSubgraph
) -> Tuple[float, float]:
    """
    :return: (f(C | OPT) - f(C), g(C | OPT) - g(C)) where f is the single-member
        link-density on the link-space graph and g the one on the link-skein graph.
    """
    if space.mode != LinkMode.SPACE or skein.mode != LinkMode.SKEIN:
        raise DomainError("free_rider_gap expects a link-space and a link-skein graph")
    if space.endpoints != skein.endpoints:
        raise DomainError("link graphs were built from different original graphs")
    union = c.nodes | opt.nodes

    def delta(lg: LinkGraph) -> float:
        before = weighted_subgraph_density(_rebind(c, lg))
        after = weighted_subgraph_density(LinkSubgraph(lg, union))
        return after - before

    return delta(space), delta(skein)
