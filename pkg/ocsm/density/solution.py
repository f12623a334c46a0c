from typing import Iterable, Iterator, Tuple

import numpy as np

from ..errors import DomainError
from ..link_graph import LinkGraph, LinkSubgraph


class Solution:
    """
    An ordered list of link-subgraphs of one LinkGraph together with the
    occurrence counter O: for every link-graph edge, how many members induce it.
    """

    __slots__ = ("link_graph", "members", "member_edges", "occurrence")

    def __init__(self, link_graph: LinkGraph, members: Iterable[LinkSubgraph] = ()):
        self.link_graph = link_graph
        self.members: Tuple[LinkSubgraph, ...] = tuple(members)
        self.occurrence = np.zeros(link_graph.edge_count, dtype=np.int64)
        member_edges = []
        for member in self.members:
            if member.link_graph is not link_graph:
                raise DomainError("all solution members must reference the same link graph")
            edge_ids = member.induced_edges()
            self.occurrence[edge_ids] += 1
            member_edges.append(edge_ids)
        self.member_edges: Tuple[np.ndarray, ...] = tuple(member_edges)

    def with_member(self, member: LinkSubgraph) -> "Solution":
        return Solution(self.link_graph, self.members + (member,))

    def occurrence_of(self, edge_id: int) -> int:
        return int(self.occurrence[edge_id])

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[LinkSubgraph]:
        return iter(self.members)

    def __repr__(self):
        return f"Solution(members={[len(m) for m in self.members]})"
