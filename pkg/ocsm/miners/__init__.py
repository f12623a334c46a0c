from .advanced_peeling import AdvancedPeelingMiner, PeelingSequence
from .miner import MINERS, Miner, check_member, make_miner, register_miner
from .miner_config import (
    ExpansionStrategy,
    MinerConfigModel,
    MinerDiagnostics,
    MinerOutcome,
)
from .peeling import PeelingMiner, feasible_components, peel_to_feasible, rank_by_density
from .seed_expansion import SeedExpansionMiner, sea_expand
from .wrappers import apa_mine, pa_mine, sea_mine
