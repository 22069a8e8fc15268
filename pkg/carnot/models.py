"""
Carnot Models

Hook-law oscillator, amplification results and the two-column regime summary.
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class HookOscillator(BaseModel):
    """A single macroscopic harmonic mode obeying Hook's law."""
    model_config = ConfigDict(frozen=True)

    kappa: float = Field(..., gt=0, allow_inf_nan=False, description="Spring constant (N/m)")
    amplitude: float = Field(..., ge=0, allow_inf_nan=False, description="Amplitude (m)")


class Amplification(BaseModel):
    """Raising an oscillator from energy E_L to E_H by applied work."""
    model_config = ConfigDict(frozen=True)

    energy_low: float = Field(..., ge=0, description="E_L (J)")
    energy_high: float = Field(..., ge=0, description="E_H (J)")
    temperature_low: float = Field(..., ge=0, description="T_L = E_L/k_B (K)")
    temperature_high: float = Field(..., ge=0, description="T_H = E_H/k_B (K)")
    min_work: float = Field(..., ge=0, description="Resonant work E_H - E_L (J)")
    efficiency: Optional[float] = Field(None, description="1 - T_L/T_H; None when T_L = 0")
    waste_fraction: float = Field(0.0, ge=0, lt=1, description="Share of applied work lost off resonance")
    actual_work: float = Field(..., ge=0, description="W_min / (1 - waste_fraction) (J)")


class ColumnKind(str, Enum):
    HIGH_OCCUPATION = "high_occupation"
    CANONIC = "canonic"


class RegimeSummary(BaseModel):
    """One column of the two-regime property table, evaluated at a given Φ and frequency."""
    model_config = ConfigDict(frozen=True)

    regime: ColumnKind
    occupancy: float = Field(..., ge=0, description="Exact Bose-Einstein n at this Φ")
    temperature: Optional[float] = Field(None, description="Column temperature formula (K); None where undefined")
    equilibrium_p: float = Field(..., ge=0, le=0.5, description="Equilibrium fraction of energetic modes")
    entropy: Optional[float] = Field(None, description="Average mode entropy (k_B); None where undefined")
    distribution: str = Field(..., description="Shape of the occupancy law in this regime")
    carnot_role: str = Field(..., description="Role of the regime in a Carnot cycle")
    applicable: bool = Field(..., description="Whether the occupancy lies inside this regime")
    warnings: List[str] = Field(default_factory=list)
