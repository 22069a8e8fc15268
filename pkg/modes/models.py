"""
Mode Models

Pydantic models for the dimensionless ratio Φ = hν/k_BT, single modes and
ordered mode ensembles.
"""

from enum import Enum
from typing import List, Union

from pydantic import BaseModel, ConfigDict, Field


class Regime(str, Enum):
    """Which per-mode entropy formula to apply."""
    QUANTUM = "quantum"
    CLASSICAL = "classical"
    EXACT = "exact"


class PhiRatio(BaseModel):
    """Quantum energy relative to the thermal energy, hν/k_BT."""
    model_config = ConfigDict(frozen=True)

    phi: float = Field(..., gt=0, allow_inf_nan=False, description="Dimensionless hν/k_BT")

    def __float__(self) -> float:
        return self.phi


PhiLike = Union[PhiRatio, float]


class Mode(BaseModel):
    """A single mode holding an average of `occupancy` quanta at `frequency`."""
    model_config = ConfigDict(frozen=True)

    frequency: float = Field(..., gt=0, allow_inf_nan=False, description="Mode frequency (Hz)")
    occupancy: float = Field(..., ge=0, allow_inf_nan=False, description="Mean number of quanta")


class ModeEnsemble(BaseModel):
    """An ordered sequence of Λ ≥ 1 modes."""
    model_config = ConfigDict(frozen=True)

    modes: List[Mode] = Field(..., min_length=1, description="Modes in emission order")

    @property
    def length(self) -> int:
        return len(self.modes)

    @property
    def occupancies(self) -> List[float]:
        return [mode.occupancy for mode in self.modes]

    def concat(self, other: "ModeEnsemble") -> "ModeEnsemble":
        """Return the sequence of this ensemble followed by `other`."""
        return ModeEnsemble(modes=[*self.modes, *other.modes])

    @classmethod
    def uniform(cls, occupancy: float, length: int, frequency: float = 1.0) -> "ModeEnsemble":
        """Build Λ identical modes, the equilibrium case where every T_i equals T."""
        return cls(modes=[Mode(frequency=frequency, occupancy=occupancy)] * length)

    @classmethod
    def from_occupancies(cls, occupancies: List[float], frequency: float = 1.0) -> "ModeEnsemble":
        return cls(modes=[Mode(frequency=frequency, occupancy=n) for n in occupancies])
