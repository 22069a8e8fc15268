"""
Independent replica chains.

Replica seeds are derived from the run seed with SeedSequence.spawn, so a
(config, replicas) pair always reproduces the same merged summary no matter
how many worker processes execute it.
"""

import concurrent.futures as cf
import logging
import os
from functools import reduce
from typing import List, Optional

import numpy as np

from modes.errors import DomainError
from simulation.chain import run, summarize
from simulation.models import OccupancySummary, SimConfig

logger = logging.getLogger(__name__)


def replica_seeds(seed: int, replicas: int) -> List[int]:
    """64-bit seeds of `replicas` statistically independent child streams."""
    if replicas < 1:
        raise DomainError("need at least one replica")
    children = np.random.SeedSequence(seed).spawn(replicas)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def merge_summaries(first: OccupancySummary, second: OccupancySummary) -> OccupancySummary:
    """
    Pool two summaries of the same (M, Q) system.

    Histograms and sample counts add; the distance is recomputed on the pooled
    histogram. The merge is associative.
    """
    if (first.modes, first.quanta) != (second.modes, second.quanta):
        raise DomainError(
            f"cannot merge M={first.modes},Q={first.quanta} with M={second.modes},Q={second.quanta}"
        )
    size = max(len(first.histogram), len(second.histogram))
    histogram = [
        (first.histogram[i] if i < len(first.histogram) else 0)
        + (second.histogram[i] if i < len(second.histogram) else 0)
        for i in range(size)
    ]
    config = SimConfig(modes=first.modes, quanta=first.quanta, steps=0)
    rng = {
        "algorithm": first.rng.get("algorithm"),
        "numpy": first.rng.get("numpy"),
        "seeds": _seeds_of(first) + _seeds_of(second),
    }
    return summarize(
        config,
        histogram,
        first.samples + second.samples,
        checkpoints=[*first.checkpoints, *second.checkpoints],
        rng=rng,
    )


def _seeds_of(summary: OccupancySummary) -> List[int]:
    if "seeds" in summary.rng:
        return list(summary.rng["seeds"])
    return [summary.rng["seed"]]


def run_replicas(config: SimConfig, replicas: int, workers: Optional[int] = None) -> OccupancySummary:
    """
    Run `replicas` chains with derived seeds and merge their summaries.

    A single replica runs in-process with the config's own seed.
    """
    if replicas == 1:
        return run(config)
    configs = [config.model_copy(update={"seed": s}) for s in replica_seeds(config.seed, replicas)]
    workers = min(replicas, workers or os.cpu_count() or 1)
    logger.info(f"running {replicas} replicas on {workers} worker processes")

    if workers == 1:
        summaries = [run(c) for c in configs]
    else:
        with cf.ProcessPoolExecutor(max_workers=workers) as ex:
            # map keeps replica order, so the merged rng seed list is reproducible
            summaries = list(ex.map(run, configs))

    merged = reduce(merge_summaries, summaries)
    return merged.model_copy(update={"rng": {**merged.rng, "root_seed": config.seed}})
