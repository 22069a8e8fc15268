"""
Benford's law as the equilibrium distribution of digit-modes.

A digit N is represented by a mode holding N quanta. Keeping Φ fixed and
distributing the digits with density ρ(n) such that ρ(n)Φ = ln(1 + 1/n)
puts every digit-mode at the same temperature. Normalizing ρ removes Φ
entirely, and since Σ_{d=1}^{b-1} ln(1 + 1/d) = ln b the result is
log_b(1 + 1/d).
"""

import math
from typing import List, Sequence

from benford.models import DigitDistribution
from modes.constants import CODATA, PhysicalConstants
from modes.errors import DomainError
from modes.statistics import phi_of_occupancy


def check_base(base: int) -> int:
    if isinstance(base, bool) or not isinstance(base, int) or base < 2:
        raise DomainError(f"base must be an integer >= 2, got {base!r}")
    return base


def digit_density(n: int, base: int = 10) -> float:
    """ρ(n)Φ = ln(1 + 1/n) for a leading digit n in [1, b-1]."""
    check_base(base)
    if isinstance(n, bool) or not isinstance(n, int) or not (1 <= n <= base - 1):
        raise DomainError(f"digit must be an integer in [1, {base - 1}], got {n!r}")
    return math.log1p(1.0 / n)


def benford_pmf(base: int = 10) -> DigitDistribution:
    """φ(d) = log_b(1 + 1/d) for d = 1..b-1."""
    check_base(base)
    ln_base = math.log(base)
    probs = [digit_density(d, base) / ln_base for d in range(1, base)]
    return DigitDistribution(base=base, probs=probs)


def digit_mode_phis(base: int = 10, scale: float = 1.0) -> List[float]:
    """
    Φ(n) = ln(1 + 1/n) for each digit-mode n = 1..b-1, multiplied by `scale`.

    The scale stands for the arbitrary temperature choice; it cancels on normalization.
    """
    check_base(base)
    if not (math.isfinite(scale) and scale > 0):
        raise DomainError("scale must be positive")
    return [phi_of_occupancy(d) * scale for d in range(1, base)]


def digit_mode_frequencies(
    temperature: float,
    base: int = 10,
    consts: PhysicalConstants = CODATA,
) -> List[float]:
    """
    Spectral-filter frequencies ν_d = k_BT ln(1 + 1/d)/h that put digit-modes
    1..b-1 at one common temperature T. Reported as values only.
    """
    if not (math.isfinite(temperature) and temperature > 0):
        raise DomainError("temperature must be positive")
    return [consts.k_B * temperature * phi / consts.h for phi in digit_mode_phis(base)]


def equilibrium_digit_distribution(phis: Sequence[float]) -> DigitDistribution:
    """
    Normalize the ρΦ vector of digit-modes 1..len(phis) into a distribution.

    The output is unchanged by any positive rescaling of `phis`.

    Raises:
        DomainError: if the vector is empty or holds a non-positive or non-finite Φ
    """
    values = [float(phi) for phi in phis]
    if not values:
        raise DomainError("need at least one digit-mode")
    if any(not math.isfinite(v) or v <= 0 for v in values):
        raise DomainError("phi must be positive")
    total = math.fsum(values)
    return DigitDistribution(base=len(values) + 1, probs=[v / total for v in values])
