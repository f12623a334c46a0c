from .effective_weights import EffectiveWeights
from .link_graph import (
    LinkGraph,
    LinkMode,
    build_link_graph,
    build_link_skein,
    build_link_space,
)
from .link_subgraph import (
    LinkSubgraph,
    link_subgraph_from_labels,
    min_occurrence,
    occurrence_profile,
    r_connected,
    restore,
)
from .serialization import write_link_graph
from .similarity import closed_neighborhood_similarity
from .statistics import (
    LinkGraphStatistics,
    SimilarityComparison,
    compare_similarity_distributions,
    link_components,
    link_graph_statistics,
    similarity_histogram,
)
