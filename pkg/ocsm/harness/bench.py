"""
File: bench.py

Description:
    Replays a matrix of (algorithm, k, t) runs over one graph and emits one row per
    run. Cells are independent, so with n_proc > 1 they are spread over a process
    pool. Rows can be mirrored to a wandb run.
"""

import multiprocessing as mp
import sys
import time
from itertools import product
from typing import Any, Dict, List, Optional, Tuple

try:
    from tqdm import tqdm
except ImportError:

    def tqdm(iterator, *args, **kwargs):
        return iterator


from ..density import link_density
from ..errors import FeasibilityError
from ..graph import Graph
from ..harness_config import BenchConfigModel
from ..link_graph import LinkGraph, build_link_skein
from ..miners import MinerConfigModel, make_miner

_Cell = Tuple[str, int, int, str]

_worker_link_graph: Optional[LinkGraph] = None


def _init_worker(link_graph: LinkGraph):
    global _worker_link_graph
    _worker_link_graph = link_graph


def _run_pooled_cell(cell: _Cell) -> Dict[str, Any]:
    return _run_cell(_worker_link_graph, cell)


def _run_cell(link_graph: LinkGraph, cell: _Cell) -> Dict[str, Any]:
    algorithm, k, t, strategy = cell
    row: Dict[str, Any] = {"algorithm": algorithm, "k": k, "t": t, "strategy": strategy}
    config = MinerConfigModel(k=k, t=t, expansion_strategy=strategy)
    start = time.perf_counter()
    try:
        outcome = make_miner(algorithm, config).mine(link_graph.graph, link_graph)
    except FeasibilityError:
        row.update(feasible=False, link_density=None, members=0, complete=False)
    else:
        row.update(
            feasible=True,
            link_density=link_density(outcome.solution),
            members=len(outcome.solution),
            complete=outcome.complete,
        )
    row["mining_time"] = time.perf_counter() - start
    return row


def bench_cells(config: BenchConfigModel) -> List[_Cell]:
    return [
        (algorithm, k, t, config.strategy.value)
        for algorithm, k, t in product(config.algorithms, config.k_values, config.t_values)
    ]


def _init_wandb(config: BenchConfigModel, g: Graph):
    import wandb

    wandb_config = config.wandb_config
    print("Attempting to create new wandb run...", file=sys.stderr)
    run = wandb.init(
        project=wandb_config.project,
        group=wandb_config.group,
        name=wandb_config.run,
        id=wandb_config.id,
        resume="allow" if wandb_config.resume else None,
        config={
            "algorithms": config.algorithms,
            "k_values": config.k_values,
            "t_values": config.t_values,
            "strategy": config.strategy.value,
            "node_count": g.node_count,
            "edge_count": g.edge_count,
            **wandb_config.additional_wandb_config,
        },
        reinit=True,
    )
    print("Created wandb run!", run.id, file=sys.stderr)
    return run


def run_bench(
    g: Graph, config: BenchConfigModel, link_graph: Optional[LinkGraph] = None
) -> List[Dict[str, Any]]:
    """
    :return: one row per (algorithm, k, t) in matrix order; every row also carries
        the shared link-graph build time.
    """
    build_time = 0.0
    if link_graph is None:
        start = time.perf_counter()
        link_graph = build_link_skein(g)
        build_time = time.perf_counter() - start
    cells = bench_cells(config)

    if config.n_proc > 1:
        can_fork = "forkserver" in mp.get_all_start_methods()
        start_method = "forkserver" if can_fork else "spawn"
        context = mp.get_context(start_method)
        with context.Pool(
            processes=config.n_proc, initializer=_init_worker, initargs=(link_graph,)
        ) as pool:
            rows = list(tqdm(pool.imap(_run_pooled_cell, cells), total=len(cells)))
    else:
        rows = [_run_cell(link_graph, cell) for cell in tqdm(cells)]

    for row in rows:
        row["link_graph_time"] = build_time

    if config.log_to_wandb:
        run = _init_wandb(config, g)
        for row in rows:
            run.log(row)
        run.finish()
    return rows
