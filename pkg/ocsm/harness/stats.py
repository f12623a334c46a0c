import time
from dataclasses import asdict
from typing import Any, Dict

from ..graph import Graph, graph_statistics
from ..link_graph import (
    build_link_skein,
    build_link_space,
    compare_similarity_distributions,
    link_graph_statistics,
)


def stats_report(g: Graph, histogram: bool = False, bins: int = 10) -> Dict[str, Any]:
    """Dataset statistics plus the space-vs-skein comparison of both link graphs."""
    report: Dict[str, Any] = {"graph": asdict(graph_statistics(g))}

    start = time.perf_counter()
    space = build_link_space(g)
    space_time = time.perf_counter() - start
    start = time.perf_counter()
    skein = build_link_skein(g)
    skein_time = time.perf_counter() - start

    report["link_graphs"] = [
        asdict(link_graph_statistics(space)),
        asdict(link_graph_statistics(skein)),
    ]
    if histogram:
        report["similarity_histogram"] = compare_similarity_distributions(
            space, skein, bins
        ).as_rows()
    report["timings"] = {"space_build": space_time, "skein_build": skein_time}
    return report
