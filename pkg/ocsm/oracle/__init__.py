from .enumeration import ThresholdCounts, enumerate_feasible_subgraphs, threshold_counts
from .exact import exact_top_t, greedy_top_t
from .oracle_config import OracleLimitsModel
