from .evaluation import DensityReport, conductance_eval, evaluate, modularity_eval
from .free_rider import free_rider_gap
from .link_density import (
    MarginalDensity,
    link_density,
    member_contributions,
    ratio_bound,
    weighted_subgraph_density,
)
from .solution import Solution
