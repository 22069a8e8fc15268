"""
Monte Carlo exchange of indistinguishable quanta among modes.

This package provides:
- SimConfig, SimState, OccupancySummary: run parameters and results
- init_state, step, run, final_state: the exchange chain
- geometric_reference, geometric_tail, composition_marginal, total_variation,
  distance_to_geometric: reference laws
- benford_of_occupancies: leading digits of simulated occupancies
- run_replicas, merge_summaries: independent seeded replicas
"""

from .chain import final_state, init_state, run, step
from .digits import benford_of_occupancies
from .models import Checkpoint, InitMode, OccupancySummary, SimConfig, SimState
from .reference import (
    composition_marginal,
    distance_to_geometric,
    geometric_ratio,
    geometric_reference,
    geometric_tail,
    total_variation,
)
from .replicas import merge_summaries, replica_seeds, run_replicas

__all__ = [
    "final_state", "init_state", "run", "step",
    "benford_of_occupancies",
    "Checkpoint", "InitMode", "OccupancySummary", "SimConfig", "SimState",
    "composition_marginal", "distance_to_geometric", "geometric_ratio", "geometric_reference",
    "geometric_tail", "total_variation",
    "merge_summaries", "replica_seeds", "run_replicas",
]
