"""
File: cli.py

Description:
    The ocsm command line. Every subcommand writes a JSON report to --out or
    stdout and a human-readable summary to stderr.

    Exit codes: 0 success, 2 usage or configuration error, 3 no k-core for the
    requested k, 1 any other failure.
"""

import argparse
import sys
import time
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from ..errors import FeasibilityError, OCSMError
from ..graph import Graph, load_edge_list_file
from ..harness_config import (
    DEFAULT_CONFIG_FILENAME,
    BenchConfigModel,
    HarnessConfigModel,
    generate_config,
    load_config,
)
from ..link_graph import LinkMode, build_link_graph, write_link_graph
from ..miners import MINERS, MinerConfigModel, make_miner
from ..oracle import OracleLimitsModel, enumerate_feasible_subgraphs, exact_top_t, threshold_counts
from ..util import report_rows, report_run
from .bench import run_bench
from .run_report import build_run_report, load_report_solution, outcome_report, round_floats, write_report
from .stats import stats_report

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _int_range(text: str) -> List[int]:
    """Parses "a:b" (inclusive) or a single integer."""
    try:
        if ":" in text:
            low, high = (int(part) for part in text.split(":", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b or an integer, got {text!r}") from None
    if low > high:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(low, high + 1))


def _add_io(parser: argparse.ArgumentParser):
    parser.add_argument("--input", required=True, help="edge list file")
    parser.add_argument("--out", default=None, help="report path, stdout when omitted")


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="ocsm", description="Top-t overlapping cohesive subgraph mining.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("linkgraph", help="build and write a link graph")
    _add_io(p)
    p.add_argument("--mode", choices=[m.value for m in LinkMode], default=None)
    p.add_argument("--config", default=None)

    p = sub.add_parser("mine", help="run one miner")
    _add_io(p)
    p.add_argument("--algo", required=True, choices=sorted(MINERS))
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--strategy", choices=["li", "lg"], default=None)
    p.add_argument("--seed", type=int, default=None, help="reserved, every miner is deterministic")
    p.add_argument("--config", default=None)

    p = sub.add_parser("eval", help="re-evaluate the members of an earlier report")
    _add_io(p)
    p.add_argument("--solution", required=True)
    p.add_argument("--k", type=int, default=None, help="recheck every member against this minimum degree")
    p.add_argument("--mode", choices=[m.value for m in LinkMode], default=None)
    p.add_argument("--config", default=None)

    p = sub.add_parser("oracle", help="exact top-t on a small graph")
    _add_io(p)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--reference-count", type=int, default=None,
                   help="expected candidate count, flagged against both degree thresholds")
    p.add_argument("--config", default=None)

    p = sub.add_parser("bench", help="run a matrix of miners")
    _add_io(p)
    p.add_argument("--algos", default=None, help="comma separated, e.g. pa,apa,sea")
    p.add_argument("--k-range", type=_int_range, default=None)
    p.add_argument("--t-range", type=_int_range, default=None)
    p.add_argument("--strategy", choices=["li", "lg"], default=None)
    p.add_argument("--n-proc", type=int, default=None)
    p.add_argument("--wandb", action="store_true", help="log rows to wandb")
    p.add_argument("--config", default=None)

    p = sub.add_parser("stats", help="dataset and link graph statistics")
    _add_io(p)
    p.add_argument("--histogram", action="store_true")
    p.add_argument("--bins", type=int, default=10)

    p = sub.add_parser("config", help="write a default config file")
    p.add_argument("--out", default=DEFAULT_CONFIG_FILENAME)
    p.add_argument("--force", action="store_true", help="overwrite without asking")
    return parser


def _harness_config(args) -> HarnessConfigModel:
    if getattr(args, "config", None):
        return load_config(args.config)
    return HarnessConfigModel()


def _miner_config(base: MinerConfigModel, args) -> MinerConfigModel:
    values = base.model_dump()
    for key, flag in (("k", "k"), ("t", "t"), ("expansion_strategy", "strategy")):
        value = getattr(args, flag, None)
        if value is not None:
            values[key] = value
    return MinerConfigModel.model_validate(values)


def _load_graph(path: str) -> Graph:
    return load_edge_list_file(path)


def _link_mode(args) -> LinkMode:
    if args.mode is not None:
        return LinkMode(args.mode)
    return _harness_config(args).link_mode


def _cmd_linkgraph(args) -> None:
    g = _load_graph(args.input)
    start = time.perf_counter()
    lg = build_link_graph(g, _link_mode(args))
    build_time = time.perf_counter() - start
    if args.out is None:
        write_link_graph(lg, sys.stdout)
    else:
        with open(args.out, "wt") as f:
            write_link_graph(lg, f)
    report_run(
        "LINK GRAPH",
        {
            "Algorithm": f"link-{lg.mode.value}",
            "Link Nodes": lg.node_count,
            "Link Edges": lg.edge_count,
            "Link Graph Time": build_time,
        },
    )


def _cmd_mine(args) -> Dict[str, Any]:
    config = _miner_config(_harness_config(args).miner_config, args)
    g = _load_graph(args.input)
    outcome = make_miner(args.algo, config).mine(g)
    echo = {
        "algorithm": args.algo,
        "k": config.k,
        "t": config.t,
        "strategy": config.expansion_strategy.value,
        "seed": args.seed,
    }
    report = outcome_report("mine", g, outcome, echo, config.k)
    _summarize(args.algo.upper(), echo, report)
    return report


def _cmd_eval(args) -> Dict[str, Any]:
    if args.k is not None and args.k < 1:
        raise _UsageError(f"--k must be a positive integer, got {args.k}")
    g = _load_graph(args.input)
    start = time.perf_counter()
    lg = build_link_graph(g, _link_mode(args))
    timings = {"link_graph": time.perf_counter() - start}
    solution = load_report_solution(args.solution, lg)
    echo = {"mode": lg.mode.value, "solution": args.solution, "k": args.k}
    report = build_run_report("eval", g, solution, echo, timings, k=args.k)
    _summarize("EVAL", {}, report)
    return report


def _cmd_oracle(args) -> Dict[str, Any]:
    harness_config = _harness_config(args)
    config = _miner_config(harness_config.miner_config, args)
    limits: OracleLimitsModel = harness_config.oracle_limits
    g = _load_graph(args.input)
    start = time.perf_counter()
    node_sets = enumerate_feasible_subgraphs(g, config.k, limits)
    enumeration_time = time.perf_counter() - start
    outcome = exact_top_t(g, config.k, config.t, limits, node_sets=node_sets)
    counts = threshold_counts(
        g, config.k, limits, args.reference_count, known_counts={config.k: len(node_sets)}
    )
    echo = {"algorithm": "oracle", "k": config.k, "t": config.t}
    report = outcome_report("oracle", g, outcome, echo, config.k, {"enumeration": enumeration_time})
    timings = report.pop("timings")
    report["candidates"] = round_floats(counts.as_dict())
    report["timings"] = timings
    _summarize("ORACLE", echo, report)
    return report


def _cmd_bench(args) -> Dict[str, Any]:
    base = _harness_config(args).bench_config
    values = base.model_dump()
    if args.algos is not None:
        values["algorithms"] = [a.strip() for a in args.algos.split(",") if a.strip()]
    if args.k_range is not None:
        values["k_values"] = args.k_range
    if args.t_range is not None:
        values["t_values"] = args.t_range
    if args.strategy is not None:
        values["strategy"] = args.strategy
    if args.n_proc is not None:
        values["n_proc"] = args.n_proc
    if args.wandb:
        values["log_to_wandb"] = True
    config = BenchConfigModel.model_validate(values)
    unknown = [a for a in config.algorithms if a not in MINERS]
    if unknown:
        raise _UsageError(f"unknown algorithms {unknown}, expected some of {sorted(MINERS)}")

    g = _load_graph(args.input)
    rows = run_bench(g, config)
    report_rows("BENCH", rows)
    return round_floats(
        {
            "command": "bench",
            "config": config.model_dump(mode="json", exclude={"wandb_config"}),
            "rows": rows,
        }
    )


def _cmd_stats(args) -> Dict[str, Any]:
    g = _load_graph(args.input)
    report = stats_report(g, histogram=args.histogram, bins=args.bins)
    report_rows("STATS", [report["graph"], *report["link_graphs"]])
    return round_floats({"command": "stats", **report})


def _cmd_config(args) -> None:
    generate_config(config_location=args.out, force_overwrite=args.force)


def _summarize(title: str, echo: Dict[str, Any], report: Dict[str, Any]):
    density = report["density"]
    timings = report["timings"]
    report_run(
        title,
        {
            "Algorithm": echo.get("algorithm"),
            "k": echo.get("k"),
            "t": echo.get("t"),
            "Strategy": echo.get("strategy"),
            "Link-Density": density["link_density"],
            "Member Densities": density["member_densities"],
            "Max Link Weight": density["w_max"],
            "Ratio Bound": density["ratio_bound"],
            "Modularity": density["modularity"],
            "Mean Conductance": density["mean_conductance"],
            "Members Found": len(report["members"]),
            "Complete": report.get("complete"),
            "Iterations": report.get("iterations"),
            "Link Graph Time": timings.get("link_graph"),
            "Mining Time": timings.get("mining"),
            "Evaluation Time": timings.get("evaluation"),
        },
    )


COMMANDS = {
    "linkgraph": _cmd_linkgraph,
    "mine": _cmd_mine,
    "eval": _cmd_eval,
    "oracle": _cmd_oracle,
    "bench": _cmd_bench,
    "stats": _cmd_stats,
    "config": _cmd_config,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        report = COMMANDS[args.command](args)
        if report is not None:
            write_report(report, args.out)
    except _UsageError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"Error: invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FeasibilityError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (OCSMError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def main():
    sys.exit(run())
