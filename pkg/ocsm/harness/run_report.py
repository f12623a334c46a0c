"""
File: run_report.py

Description:
    JSON run reports. Keys keep insertion order and floats are rounded to 6
    decimals, so reruns differ only in the timings block.
"""

import json
import sys
import time
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..density import Solution, evaluate, member_contributions
from ..errors import OCSMError
from ..graph import Graph
from ..link_graph import LinkGraph, LinkSubgraph, link_subgraph_from_labels, restore
from ..miners import MinerOutcome, check_member

FLOAT_DECIMALS = 6


def round_floats(obj: Any) -> Any:
    if isinstance(obj, (float, np.floating)):
        return round(float(obj), FLOAT_DECIMALS)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, dict):
        return {key: round_floats(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(val) for val in obj]
    return obj


def member_entries(g: Graph, solution: Solution) -> List[Dict[str, Any]]:
    return [
        {
            "nodes": g.labels_of(restore(member)),
            "link_nodes": member.labels(),
            "link_node_count": len(member),
            "contribution": contribution,
        }
        for member, contribution in zip(solution.members, member_contributions(solution))
    ]


def verify_members(g: Graph, members: Sequence[LinkSubgraph], k: int):
    for index, member in enumerate(members):
        if not check_member(g, member, k):
            raise OCSMError(f"member {index} fails the minimum degree {k} recheck")


def build_run_report(
    command: str,
    g: Graph,
    solution: Solution,
    config: Dict[str, Any],
    timings: Dict[str, float],
    complete: Optional[bool] = None,
    k: Optional[int] = None,
    extra: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    """
    :param k: when given, every member is rechecked against the original graph first.
    :param extra: command-specific fields placed before the timings.
    """
    if k is not None:
        verify_members(g, solution.members, k)
    start = time.perf_counter()
    density = evaluate(g, solution).as_dict()
    timings = dict(timings)
    timings["evaluation"] = time.perf_counter() - start

    report: Dict[str, Any] = {
        "command": command,
        "config": config,
        "members": member_entries(g, solution),
    }
    if complete is not None:
        report["complete"] = complete
    report["density"] = density
    if extra:
        report.update(extra)
    report["timings"] = timings
    return round_floats(report)


def outcome_report(
    command: str, g: Graph, outcome: MinerOutcome, config: Dict[str, Any], k: int,
    timings: Optional[Dict[str, float]] = None,
) -> Dict[str, Any]:
    all_timings = dict(outcome.diagnostics.timings)
    all_timings.update(timings or {})
    return build_run_report(
        command,
        g,
        outcome.solution,
        config,
        all_timings,
        complete=outcome.complete,
        k=k,
        extra={"iterations": outcome.diagnostics.iterations},
    )


def write_report(report: Dict[str, Any], out: Optional[str] = None):
    text = json.dumps(report, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "wt") as f:
            f.write(text)


def load_report_solution(path: str, link_graph: LinkGraph) -> Solution:
    """Rebuilds the solution of an earlier report from its link-node labels."""
    with open(path, "rt") as f:
        report = json.load(f)
    try:
        members = report["members"]
        return Solution(
            link_graph,
            [link_subgraph_from_labels(link_graph, m["link_nodes"]) for m in members],
        )
    except (KeyError, TypeError) as e:
        raise OCSMError(f"{path} is not a run report with members: {e}") from e
