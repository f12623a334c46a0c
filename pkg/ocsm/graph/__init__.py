from .core import (
    GraphStatistics,
    connected_components,
    coreness,
    count_triangles,
    graph_statistics,
    is_connected,
    k_core,
    max_coreness,
    min_degree,
)
from .graph import Graph, NodeSet, label_sort_key, load_edge_list, load_edge_list_file
