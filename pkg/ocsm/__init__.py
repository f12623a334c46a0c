from .density import DensityReport, Solution, evaluate, link_density
from .errors import (
    DomainError,
    EdgeListParseError,
    FeasibilityError,
    OCSMError,
    OracleLimitError,
)
from .graph import Graph, k_core, load_edge_list, load_edge_list_file
from .harness_config import (
    BenchConfigModel,
    HarnessConfigModel,
    WandbConfigModel,
    generate_config,
)
from .link_graph import LinkGraph, LinkMode, LinkSubgraph, build_link_graph
from .miners import (
    MinerConfigModel,
    MinerOutcome,
    apa_mine,
    make_miner,
    pa_mine,
    sea_mine,
)
from .oracle import OracleLimitsModel, exact_top_t
