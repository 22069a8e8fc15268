"""
Quanta-exchange Markov chain.

Each step draws a donor uniformly from all M modes. An empty donor makes the
step a null move; otherwise one quantum moves to a target drawn uniformly from
the other M - 1 modes. The kernel is symmetric, so the stationary law is
uniform over the compositions of Q quanta into M modes, the counting measure
of indistinguishable bosons. Its single-mode marginal approaches the
geometric (Bose-Einstein) occupancy with mean Q/M.
"""

import logging
from typing import Callable, List, Optional, Sequence

import numpy as np

from modes.errors import ConservationError
from modes.statistics import phi_of_occupancy
from simulation.models import (
    RNG_ALGORITHM,
    Checkpoint,
    InitMode,
    OccupancySummary,
    SimConfig,
    SimState,
)
from simulation.reference import distance_to_geometric, empirical_pmf, geometric_reference, geometric_tail

logger = logging.getLogger(__name__)

# random draws are generated in blocks of this many steps
DRAW_BLOCK = 1 << 16
CHECKPOINT_FRACTIONS = (0.1, 0.5, 1.0)

SnapshotHook = Callable[[int, List[int]], None]


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def rng_metadata(seed: int) -> dict:
    return {"algorithm": RNG_ALGORITHM, "numpy": np.__version__, "seed": seed}


def init_state(config: SimConfig) -> SimState:
    """Place Q quanta in mode 0 (all_in_one) or spread them evenly, remainder left to right (uniform)."""
    if config.init == InitMode.ALL_IN_ONE:
        occupancies = [config.quanta] + [0] * (config.modes - 1)
    else:
        base, remainder = divmod(config.quanta, config.modes)
        occupancies = [base + 1 if i < remainder else base for i in range(config.modes)]
    return SimState(occupancies=occupancies, step=0)


def _advance(occupancies: List[int], donors: Sequence[int], targets: Sequence[int]) -> None:
    # targets are drawn from M - 1 slots and shifted past the donor
    for donor, target in zip(donors, targets):
        if occupancies[donor]:
            occupancies[donor] -= 1
            occupancies[target + (target >= donor)] += 1


def step(state: SimState, rng: np.random.Generator) -> SimState:
    """Attempt one move. With a single mode or no quanta the occupancies are unchanged."""
    occupancies = list(state.occupancies)
    modes = len(occupancies)
    if modes > 1 and any(occupancies):
        donor = int(rng.integers(0, modes))
        target = int(rng.integers(0, modes - 1))
        _advance(occupancies, (donor,), (target,))
    return SimState(occupancies=occupancies, step=state.step + 1)


def _occupation_counts(occupancies: Sequence[int]) -> np.ndarray:
    return np.bincount(np.asarray(occupancies, dtype=np.int64))


def _accumulate(histogram: np.ndarray, counts: np.ndarray) -> np.ndarray:
    if len(counts) > len(histogram):
        histogram = np.pad(histogram, (0, len(counts) - len(histogram)))
    histogram[: len(counts)] += counts
    return histogram


def _checkpoint_steps(steps: int) -> List[int]:
    if steps == 0:
        return []
    return sorted({max(1, round(f * steps)) for f in CHECKPOINT_FRACTIONS})


def summarize(
    config: SimConfig,
    histogram: Sequence[int],
    samples: int,
    checkpoints: Sequence[Checkpoint] = (),
    rng: Optional[dict] = None,
) -> OccupancySummary:
    """Build the summary of an accumulated occupation histogram."""
    histogram = [int(c) for c in histogram]
    mean = config.quanta / config.modes
    if mean > 0:
        reference = geometric_reference(mean, size=len(histogram))
        tail = geometric_tail(mean, len(histogram))
    else:
        reference, tail = [1.0] + [0.0] * (len(histogram) - 1), 0.0
    return OccupancySummary(
        modes=config.modes,
        quanta=config.quanta,
        samples=samples,
        histogram=histogram,
        mean=mean,
        phi_hat=phi_of_occupancy(mean) if mean > 0 else None,
        reference=reference,
        reference_tail=tail,
        distance=distance_to_geometric(empirical_pmf(histogram), mean),
        checkpoints=list(checkpoints),
        rng=rng if rng is not None else rng_metadata(config.seed),
    )


def run(config: SimConfig, on_snapshot: Optional[SnapshotHook] = None) -> OccupancySummary:
    """
    Run the chain and compare the sampled occupations with the geometric law of mean Q/M.

    Snapshots of the whole occupancy vector are taken every M steps once burn_in
    steps have passed. If no snapshot falls in the sampling window the final state
    is used. Checkpoint distances are measured on the instantaneous state at 10%,
    50% and 100% of the run.

    Args:
        config: chain parameters; identical configs give identical summaries
        on_snapshot: called with (step, occupation counts) for every retained snapshot

    Raises:
        ConservationError: if a snapshot does not hold exactly Q quanta
    """
    rng = make_rng(config.seed)
    state = init_state(config)
    occupancies = state.occupancies
    modes, quanta, steps = config.modes, config.quanta, config.steps
    mean = quanta / modes
    frozen = modes == 1 or quanta == 0

    histogram = np.zeros(1, dtype=np.int64)
    samples = 0
    checkpoints: List[Checkpoint] = []
    pending_checkpoints = _checkpoint_steps(steps)

    logger.info(
        f"simulating M={modes} Q={quanta} steps={steps} burn_in={config.burn_in} "
        f"init={config.init.value} seed={config.seed}"
    )

    def observe(done: int) -> None:
        nonlocal histogram, samples
        if done % modes == 0 and done >= config.burn_in and done > 0:
            if sum(occupancies) != quanta:
                raise ConservationError(f"step {done}: occupancies sum to {sum(occupancies)}, expected {quanta}")
            counts = _occupation_counts(occupancies)
            histogram = _accumulate(histogram, counts)
            samples += 1
            if on_snapshot is not None:
                on_snapshot(done, counts.tolist())
        while pending_checkpoints and pending_checkpoints[0] == done:
            pending_checkpoints.pop(0)
            distance = distance_to_geometric(empirical_pmf(_occupation_counts(occupancies)), mean)
            checkpoints.append(Checkpoint(fraction=done / steps, step=done, distance=distance))
            logger.debug(f"checkpoint step={done} tv={distance:.6f}")

    done = 0
    while done < steps:
        block = min(DRAW_BLOCK, steps - done)
        if not frozen:
            donors = rng.integers(0, modes, size=block).tolist()
            targets = rng.integers(0, modes - 1, size=block).tolist()
        position = 0
        while position < block:
            next_stride = (done // modes + 1) * modes
            next_checkpoint = pending_checkpoints[0] if pending_checkpoints else steps
            end = min(next_stride, next_checkpoint, done + block - position)
            count = end - done
            if not frozen:
                _advance(occupancies, donors[position:position + count], targets[position:position + count])
            position += count
            done = end
            observe(done)

    if samples == 0:
        if sum(occupancies) != quanta:
            raise ConservationError(f"final state holds {sum(occupancies)} quanta, expected {quanta}")
        counts = _occupation_counts(occupancies)
        histogram = _accumulate(histogram, counts)
        samples = 1
        if on_snapshot is not None:
            on_snapshot(done, counts.tolist())
        logger.warning("no snapshot fell after burn-in; summarizing the final state only")

    summary = summarize(config, histogram, samples, checkpoints)
    logger.info(f"simulation done: samples={samples} tv={summary.distance:.6f}")
    return summary


def final_state(config: SimConfig) -> SimState:
    """Occupancies after running config.steps moves, without sampling."""
    rng = make_rng(config.seed)
    state = init_state(config)
    occupancies = state.occupancies
    if config.modes > 1 and config.quanta > 0:
        done = 0
        while done < config.steps:
            block = min(DRAW_BLOCK, config.steps - done)
            donors = rng.integers(0, config.modes, size=block).tolist()
            targets = rng.integers(0, config.modes - 1, size=block).tolist()
            _advance(occupancies, donors, targets)
            done += block
    return SimState(occupancies=occupancies, step=config.steps)
