from typing import TextIO

from .link_graph import LinkGraph


def write_link_graph(lg: LinkGraph, stream: TextIO):
    """
    Text format: a "mode node_count edge_count" header, then one "i,j k,l weight"
    line per link-graph edge with external labels and 6-decimal weights.
    """
    stream.write(f"{lg.mode.value} {lg.node_count} {lg.edge_count}\n")
    for a, b, w in lg.weighted_edges():
        stream.write(f"{lg.link_node_label(a)} {lg.link_node_label(b)} {w:.6f}\n")
