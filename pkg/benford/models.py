"""Pydantic models for first-digit distributions, histograms and conformance reports."""

import math
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class DigitDistribution(BaseModel):
    """Probabilities of the leading digits 1..b-1 in base b."""
    model_config = ConfigDict(frozen=True)

    base: int = Field(10, ge=2, description="Number base b")
    probs: List[float] = Field(..., description="Probability of digit d at index d-1")

    @model_validator(mode="after")
    def probabilities_are_normalized(self):
        if len(self.probs) != self.base - 1:
            raise ValueError(f"expected {self.base - 1} probabilities, got {len(self.probs)}")
        if any(not (0.0 < p <= 1.0) for p in self.probs):
            raise ValueError("each probability must lie in (0, 1]")
        if abs(math.fsum(self.probs) - 1.0) > 1e-12:
            raise ValueError("probabilities must sum to 1")
        return self

    def prob(self, digit: int) -> float:
        return self.probs[digit - 1]

    def as_dict(self) -> Dict[int, float]:
        return {digit: p for digit, p in enumerate(self.probs, start=1)}


class DigitHistogram(BaseModel):
    """Observed counts of leading digits plus the number of inputs with no significant digit."""
    model_config = ConfigDict(frozen=True)

    base: int = Field(10, ge=2, description="Number base b")
    counts: List[int] = Field(..., description="Count of digit d at index d-1")
    skipped: int = Field(0, ge=0, description="Zeros and non-finite or non-numeric inputs")

    @model_validator(mode="after")
    def counts_match_base(self):
        if len(self.counts) != self.base - 1:
            raise ValueError(f"expected {self.base - 1} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")
        return self

    @computed_field
    @property
    def total(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> Dict[int, int]:
        return {digit: c for digit, c in enumerate(self.counts, start=1)}


class Verdict(str, Enum):
    CLOSE = "close"
    ACCEPTABLE = "acceptable"
    NONCONFORMING = "nonconforming"


class ConformanceReport(BaseModel):
    """Pearson χ² and mean absolute deviation of observed digit frequencies."""
    model_config = ConfigDict(frozen=True)

    chi2: float = Field(..., ge=0, description="Pearson χ² statistic")
    dof: int = Field(..., ge=0, description="Degrees of freedom, b - 2")
    p_value: Optional[float] = Field(None, ge=0, le=1, description="χ² survival probability")
    mad: float = Field(..., ge=0, le=1, description="Mean absolute deviation of frequencies")
    verdict: Verdict
    observed: List[float] = Field(..., description="Observed frequency per digit")
    expected: List[float] = Field(..., description="Reference probability per digit")
