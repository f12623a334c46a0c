import numpy as np

from .link_graph import LinkGraph
from .link_subgraph import LinkSubgraph


class EffectiveWeights:
    """
    Mutable per-run view of a LinkGraph's edge weights. The LinkGraph itself is
    never modified; miners rescale or zero the view as members are accepted.
    """

    def __init__(self, link_graph: LinkGraph):
        self.link_graph = link_graph
        self.values = link_graph.edge_weights.copy()
        self.occurrence = np.zeros(link_graph.edge_count, dtype=np.int64)

    def __getitem__(self, edge_id):
        return self.values[edge_id]

    def record_member(self, h: LinkSubgraph):
        """Every edge inside h drops to w / (O + 1), O counting accepted members holding it."""
        edge_ids = h.induced_edges()
        self.occurrence[edge_ids] += 1
        self.values[edge_ids] = self.link_graph.edge_weights[edge_ids] / (
            self.occurrence[edge_ids] + 1
        )

    def zero_out(self, h: LinkSubgraph):
        edge_ids = h.induced_edges()
        self.occurrence[edge_ids] += 1
        self.values[edge_ids] = 0.0
