"""Pydantic models for binary-file information accounting."""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class InformationMethod(str, Enum):
    """How ln C(Λ, L) is evaluated."""
    STIRLING = "stirling"
    EXACT = "exact"


class BitFileStats(BaseModel):
    """(Λ, L, p) summary of a binary file: L energetic bits among Λ modes."""
    model_config = ConfigDict(frozen=True)

    length: int = Field(..., ge=1, description="Number of modes/bits Λ")
    ones: int = Field(..., ge=0, description="Number of energetic bits L")

    @model_validator(mode="after")
    def ones_within_length(self):
        if self.ones > self.length:
            raise ValueError(f"ones ({self.ones}) cannot exceed length ({self.length})")
        return self

    @computed_field
    @property
    def p(self) -> float:
        """Fraction of energetic bits L/Λ."""
        return self.ones / self.length


class InfoNats(BaseModel):
    """Shannon information in nats."""
    model_config = ConfigDict(frozen=True)

    value: float = Field(..., ge=0, allow_inf_nan=False, description="Information (nats)")

    def to_bits(self) -> float:
        return self.value / math.log(2)


class EntropyBudget(BaseModel):
    """Entropy S against the information I it can carry at K = m·k_B per bit."""
    model_config = ConfigDict(frozen=True)

    S: float = Field(..., ge=0, allow_inf_nan=False, description="Entropy (k_B units)")
    m: int = Field(1, ge=1, description="Entropy units per energetic bit")
    I: InfoNats

    @property
    def K(self) -> float:
        """Per-bit entropy coefficient in k_B units."""
        return float(self.m)


class ClausiusStatus(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"


class ClausiusResult(BaseModel):
    """Outcome of checking S >= K·I."""
    model_config = ConfigDict(frozen=True)

    status: ClausiusStatus
    margin: float = Field(..., description="S - K·I in k_B units")

    @property
    def holds(self) -> bool:
        return self.status is ClausiusStatus.HOLDS
