"""
Reference occupancy laws for the exchange simulation.

The geometric law P(n) = (1 - x)x^n, x = n̄/(n̄ + 1), is the Bose-Einstein
occupancy of a single mode at Φ = ln(1 + 1/n̄). The composition marginal is
the exact single-mode law of Q quanta spread uniformly over the compositions
of M modes; it tends to the geometric law as M grows at fixed Q/M.
"""

import math
from typing import List, Optional, Sequence

import numpy as np
from scipy.special import gammaln

from modes.errors import DomainError

TRUNCATION_MASS = 1e-12


def _log_ratio(mean: float) -> float:
    if not (math.isfinite(mean) and mean > 0):
        raise DomainError(f"mean occupancy must be positive, got {mean}")
    return -math.log1p(1.0 / mean)


def geometric_ratio(mean: float) -> float:
    """x = n̄/(n̄ + 1), the common ratio of the geometric law."""
    return math.exp(_log_ratio(mean))


def geometric_reference(mean: float, size: Optional[int] = None) -> List[float]:
    """
    Geometric pmf with the given mean.

    With `size`, the first `size` probabilities P(0)..P(size - 1). Without it,
    the pmf is truncated once the remaining tail mass is below 1e-12, which
    takes about 27.6·n̄ entries.

    Raises:
        DomainError: if mean is not a positive finite number, or size < 1
    """
    log_x = _log_ratio(mean)
    if size is None:
        # tail beyond n_max is x^(n_max + 1)
        size = max(0, math.ceil(math.log(TRUNCATION_MASS) / log_x) - 1) + 1
    elif size < 1:
        raise DomainError(f"size must be at least 1, got {size}")
    n = np.arange(size, dtype=np.float64)
    return (np.exp(n * log_x) / (mean + 1.0)).tolist()


def geometric_tail(mean: float, size: int) -> float:
    """Geometric mass at n >= size, x^size."""
    return math.exp(size * _log_ratio(mean))


def distance_to_geometric(pmf: Sequence[float], mean: float) -> float:
    """
    Total-variation distance from `pmf` to the geometric law of the given mean.

    The reference is evaluated only over the support of `pmf`; its mass beyond
    that support enters in closed form, so no truncated reference is built.
    """
    if mean == 0:
        return total_variation(pmf, [1.0])
    reference = geometric_reference(mean, size=len(pmf))
    gap = float(np.abs(np.asarray(pmf, dtype=np.float64) - reference).sum())
    return min(1.0, max(0.0, 0.5 * (gap + geometric_tail(mean, len(pmf)))))


def composition_marginal(modes: int, quanta: int) -> List[float]:
    """
    Exact P(n) for one mode when every composition of `quanta` into `modes` parts is equally likely.

    P(n) = C(Q - n + M - 2, M - 2) / C(Q + M - 1, M - 1) for n = 0..Q.
    """
    if modes < 1 or quanta < 0:
        raise DomainError("need modes >= 1 and quanta >= 0")
    if modes == 1:
        return [0.0] * quanta + [1.0]
    n = np.arange(quanta + 1, dtype=np.float64)
    rest = quanta - n
    log_ways = gammaln(rest + modes - 1) - gammaln(rest + 1) - gammaln(modes - 1)
    log_total = gammaln(quanta + modes) - gammaln(quanta + 1) - gammaln(modes)
    return np.exp(log_ways - log_total).tolist()


def total_variation(p: Sequence[float], q: Sequence[float]) -> float:
    """½ Σ |p_n - q_n|, the shorter vector padded with zeros."""
    size = max(len(p), len(q))
    a = np.zeros(size)
    b = np.zeros(size)
    a[: len(p)] = p
    b[: len(q)] = q
    return float(min(1.0, max(0.0, 0.5 * np.abs(a - b).sum())))


def empirical_pmf(histogram: Sequence[int]) -> List[float]:
    counts = np.asarray(histogram, dtype=np.float64)
    total = counts.sum()
    if total <= 0:
        raise DomainError("empty histogram")
    return (counts / total).tolist()
