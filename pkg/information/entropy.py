"""
Shannon information, the Boltzmann H-function and the Clausius inequality
for informatics.

A file of Λ modes with L energetic bits admits C(Λ, L) equally likely
messages; its information in nats is ln C(Λ, L). The Stirling form
-Λ[p ln p + (1-p) ln(1-p)] is the default; the exact log-binomial is used
when Λ is small enough that the Stirling overshoot matters.
"""

import math
from typing import Union

import numpy as np
from scipy.special import expit, gammaln, xlogy

from information.models import (
    BitFileStats,
    ClausiusResult,
    ClausiusStatus,
    EntropyBudget,
    InfoNats,
    InformationMethod,
)
from modes.errors import DomainError
from modes.models import PhiLike
from modes.statistics import as_phi

LN2 = math.log(2.0)


def _binary_entropy_sum(ones: int, length: int) -> float:
    """p ln p + (1-p) ln(1-p) with both fractions taken straight from the counts."""
    p = ones / length
    q = (length - ones) / length
    return float(xlogy(p, p) + xlogy(q, q))


def shannon_information(
    stats: BitFileStats,
    method: Union[InformationMethod, str] = InformationMethod.STIRLING,
) -> InfoNats:
    """
    Information carried by L energetic bits in Λ modes, in nats.

    Args:
        stats: Λ and L of the file
        method: "stirling" for -Λ[p ln p + (1-p) ln(1-p)], "exact" for ln C(Λ, L)

    Returns:
        InfoNats, symmetric under L <-> Λ - L for both methods
    """
    method = InformationMethod(method)
    length, ones = stats.length, stats.ones
    if method is InformationMethod.STIRLING:
        value = -length * _binary_entropy_sum(ones, length)
    else:
        value = float(gammaln(length + 1) - (gammaln(ones + 1) + gammaln(length - ones + 1)))
    return InfoNats(value=max(value, 0.0))


def h_function(stats: BitFileStats) -> float:
    """Boltzmann H = Λ[p ln p + (1-p) ln(1-p)] in k_B units; never positive."""
    return stats.length * _binary_entropy_sum(stats.ones, stats.length)


def normalized_information(p: float) -> float:
    """
    -H/S = -[p ln p + (1-p) ln(1-p)]/ln 2, the logical Clausius inequality.

    The value lies in [0, 1], equals 1 only at p = 1/2 and contains no physical constant.
    """
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"fraction must lie in [0, 1], got {p}")
    return float(-(xlogy(p, p) + xlogy(1.0 - p, 1.0 - p)) / LN2)


def clausius_check(budget: EntropyBudget) -> ClausiusResult:
    """Check S >= K·I; a violation is reported, not raised."""
    margin = budget.S - budget.K * budget.I.value
    status = ClausiusStatus.HOLDS if margin >= 0 else ClausiusStatus.VIOLATED
    return ClausiusResult(status=status, margin=margin)


def canonic_fraction(phi: PhiLike) -> float:
    """
    Equilibrium fraction of energetic modes in a two-level system.

    Minimizing the free energy pΦ + p ln p + (1-p) ln(1-p) gives
    p/(1-p) = e^-Φ, i.e. p = 1/(1 + e^Φ) in (0, 1/2).
    """
    return float(expit(-as_phi(phi)))


def two_level_free_energy(p: np.ndarray, phi: PhiLike) -> np.ndarray:
    """Free energy per mode, pΦ + p ln p + (1-p) ln(1-p), in k_BT units."""
    p = np.asarray(p, dtype=np.float64)
    return p * as_phi(phi) + xlogy(p, p) + xlogy(1.0 - p, 1.0 - p)
