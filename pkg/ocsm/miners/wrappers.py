from typing import Optional

from ..graph import Graph
from ..link_graph import LinkGraph
from .advanced_peeling import AdvancedPeelingMiner
from .miner_config import MinerConfigModel, MinerOutcome
from .peeling import PeelingMiner
from .seed_expansion import SeedExpansionMiner


def pa_mine(g: Graph, config: MinerConfigModel, link_graph: Optional[LinkGraph] = None) -> MinerOutcome:
    return PeelingMiner(config).mine(g, link_graph)


def apa_mine(g: Graph, config: MinerConfigModel, link_graph: Optional[LinkGraph] = None) -> MinerOutcome:
    return AdvancedPeelingMiner(config).mine(g, link_graph)


def sea_mine(g: Graph, config: MinerConfigModel, link_graph: Optional[LinkGraph] = None) -> MinerOutcome:
    return SeedExpansionMiner(config).mine(g, link_graph)
