"""
Simulation Models

Configuration, state and summary of the quanta-exchange Monte Carlo run.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

RNG_ALGORITHM = "PCG64"


class InitMode(str, Enum):
    """How the Q quanta are placed before the first step."""
    ALL_IN_ONE = "all_in_one"
    UNIFORM = "uniform"


class SimConfig(BaseModel):
    """Parameters of one simulation run."""
    model_config = ConfigDict(frozen=True)

    modes: int = Field(..., ge=1, description="Number of modes M")
    quanta: int = Field(..., ge=0, description="Number of conserved quanta Q")
    steps: int = Field(..., ge=0, description="Total number of move attempts")
    burn_in: Optional[int] = Field(None, ge=0, description="Steps discarded before sampling (default 10% of steps)")
    seed: int = Field(0, ge=0, lt=2**64, description="64-bit seed of the PCG64 generator")
    init: InitMode = Field(InitMode.UNIFORM, description="Initial placement of quanta")

    @model_validator(mode="before")
    @classmethod
    def default_burn_in(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("burn_in") is None and data.get("steps") is not None:
            data = {**data, "burn_in": int(data["steps"]) // 10}
        return data

    @model_validator(mode="after")
    def burn_in_within_steps(self):
        if self.burn_in > self.steps:
            raise ValueError(f"burn_in ({self.burn_in}) cannot exceed steps ({self.steps})")
        return self


class SimState(BaseModel):
    """Occupancy of every mode after `step` move attempts."""

    occupancies: List[int] = Field(..., min_length=1, description="Quanta per mode")
    step: int = Field(0, ge=0, description="Move attempts performed so far")

    @property
    def quanta(self) -> int:
        return sum(self.occupancies)


class Checkpoint(BaseModel):
    """Distance to the reference measured part-way through a run."""
    model_config = ConfigDict(frozen=True)

    fraction: float = Field(..., gt=0, le=1)
    step: int = Field(..., ge=0)
    distance: float = Field(..., ge=0, le=1)


class OccupancySummary(BaseModel):
    """Histogram of sampled occupation values and its distance to the geometric law."""
    model_config = ConfigDict(frozen=True)

    modes: int = Field(..., ge=1)
    quanta: int = Field(..., ge=0)
    samples: int = Field(..., ge=1, description="Snapshots of the whole occupancy vector")
    histogram: List[int] = Field(..., description="Count of modes seen holding n quanta, index n")
    mean: float = Field(..., ge=0, description="Mean occupancy, Q/M")
    phi_hat: Optional[float] = Field(None, description="ln(1 + 1/mean), None for an empty system")
    reference: List[float] = Field(..., description="Geometric pmf with the same mean, over the histogram's support")
    reference_tail: float = Field(0.0, ge=0, le=1, description="Geometric mass beyond the histogram's support")
    distance: float = Field(..., ge=0, le=1, description="Total-variation distance to the reference")
    checkpoints: List[Checkpoint] = Field(default_factory=list)
    rng: Dict[str, Any] = Field(default_factory=dict, description="Generator algorithm, version and seed")

    @model_validator(mode="after")
    def histogram_mass(self):
        if sum(self.histogram) != self.modes * self.samples:
            raise ValueError("histogram mass must equal modes * samples")
        return self
