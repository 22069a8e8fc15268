"""Models for log-log occupancy samples and fitted slopes."""

import math
from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Abscissa(str, Enum):
    """What the horizontal axis of a log-log sample measures."""
    PHI = "phi"       # relative boson energy Φ
    FIELD = "field"   # field amplitude E with Φ ∝ E²


class LogLogSample(BaseModel):
    """One point of the ln n versus ln Φ curve."""
    model_config = ConfigDict(frozen=True)

    ln_phi: float = Field(..., allow_inf_nan=False, description="ln Φ of the sampled mode")
    ln_n: float = Field(..., allow_inf_nan=False, description="ln of the occupancy")
    abscissa: Abscissa = Abscissa.PHI

    @property
    def ln_x(self) -> float:
        """Plotted abscissa: ln Φ, or ln E = ln Φ / 2 after the field transform."""
        return self.ln_phi if self.abscissa is Abscissa.PHI else 0.5 * self.ln_phi

    @property
    def phi(self) -> float:
        return math.exp(self.ln_phi)


class SlopeEstimate(BaseModel):
    """Least-squares slope of ln n on the plotted abscissa within a Φ window."""
    model_config = ConfigDict(frozen=True)

    slope: float = Field(..., description="d ln n / d ln x")
    intercept: float
    window: Tuple[float, float] = Field(..., description="(phi_lo, phi_hi)")
    residual: float = Field(..., ge=0, description="RMS residual of the linear fit")
    points: int = Field(..., ge=3)
    abscissa: Abscissa = Abscissa.PHI

    @model_validator(mode="after")
    def window_is_ordered(self):
        if not self.window[0] < self.window[1]:
            raise ValueError("window must satisfy phi_lo < phi_hi")
        return self


class OccupancyBalance(BaseModel):
    """Quanta held by below-average (Φ < 1) versus above-average (Φ > 1) bosons."""
    model_config = ConfigDict(frozen=True)

    poor: float = Field(..., ge=0, description="Σ n over modes with Φ < 1")
    rich: float = Field(..., ge=0, description="Σ n over modes with Φ > 1")
    poor_modes: int = Field(..., ge=0)
    rich_modes: int = Field(..., ge=0)
