import time
from abc import ABC, abstractmethod
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple, Type

from ..density import Solution, member_contributions
from ..errors import DomainError, FeasibilityError
from ..graph import Graph, k_core, max_coreness, min_degree
from ..link_graph import (
    LinkGraph,
    LinkMode,
    LinkSubgraph,
    build_link_skein,
    min_occurrence,
    r_connected,
    restore,
)
from .miner_config import MinerConfigModel, MinerDiagnostics, MinerOutcome


class Miner(ABC):
    """
    Base class for the top-t miners. Subclasses implement _search over the
    link-nodes of the k-core; mine wraps it with the feasibility check, link graph
    construction and bookkeeping shared by every algorithm.
    """

    name: str = ""

    def __init__(self, config: MinerConfigModel):
        self.config = config

    @abstractmethod
    def _search(
        self, lg: LinkGraph, restrict: FrozenSet[int]
    ) -> Tuple[List[LinkSubgraph], int]:
        """
        :param lg: the link-skein graph of the whole input graph.
        :param restrict: link-nodes whose both endpoints lie in the k-core.
        :return: accepted members in acceptance order, and the number of outer iterations used.
        """
        raise NotImplementedError

    def mine(self, g: Graph, link_graph: Optional[LinkGraph] = None) -> MinerOutcome:
        """
        :param g: the input graph.
        :param link_graph: a prebuilt link-skein graph of g, reused across runs by the bench command.
        """
        k = self.config.k
        core = k_core(g, k)
        if not core:
            raise FeasibilityError(k, max_coreness(g))
        timings: Dict[str, float] = {}

        if link_graph is None:
            start = time.perf_counter()
            link_graph = build_link_skein(g)
            timings["link_graph"] = time.perf_counter() - start
        elif link_graph.graph is not g or link_graph.mode != LinkMode.SKEIN:
            raise DomainError("miners need the link-skein graph of the input graph")

        start = time.perf_counter()
        members, iterations = self._search(link_graph, link_graph.core_link_nodes(core))
        timings["mining"] = time.perf_counter() - start

        solution = Solution(link_graph, members)
        return MinerOutcome(
            solution=solution,
            complete=len(members) == self.config.t,
            diagnostics=MinerDiagnostics(
                member_contributions=member_contributions(solution),
                iterations=iterations,
                timings=timings,
            ),
        )


MINERS: Dict[str, Type[Miner]] = {}


def register_miner(name: str) -> Callable[[Type[Miner]], Type[Miner]]:
    def decorator(cls: Type[Miner]) -> Type[Miner]:
        cls.name = name
        MINERS[name] = cls
        return cls

    return decorator


def make_miner(name: str, config: MinerConfigModel) -> Miner:
    try:
        miner_cls = MINERS[name]
    except KeyError:
        raise DomainError(
            f"unknown algorithm {name!r}, expected one of {sorted(MINERS)}"
        ) from None
    return miner_cls(config)


def check_member(g: Graph, h: LinkSubgraph, k: int) -> bool:
    """
    Recheck of a member against the original graph: minimum occurrence, R-connectivity
    and the induced minimum degree of G[R(h)].
    """
    if not h.nodes:
        return False
    return min_occurrence(h) >= k and r_connected(h) and min_degree(g, restore(h)) >= k
