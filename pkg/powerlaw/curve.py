"""
Power-law analysis of the equilibrium occupancy curve.

In equilibrium every mode shares one temperature, so ln n against ln Φ is
a single curve: slope -1 in the high-occupation regime, exponential
truncation (ln n ≈ -Φ) in the quantum regime. Plotting against the field
amplitude (Φ ∝ E²) doubles every slope, giving -2.

Slopes are always d ln n / d ln x, occupancy on the ordinate.
"""

import logging
import math
from typing import List, Sequence, Tuple

import numpy as np

from modes.errors import DomainError
from modes.models import PhiLike
from modes.statistics import as_phi, occupancy_array
from powerlaw.models import Abscissa, LogLogSample, OccupancyBalance, SlopeEstimate

logger = logging.getLogger(__name__)

MIN_FIT_POINTS = 3


def _check_window(phi_lo: float, phi_hi: float) -> Tuple[float, float]:
    phi_lo, phi_hi = as_phi(phi_lo), as_phi(phi_hi)
    if not phi_lo < phi_hi:
        raise DomainError(f"window must satisfy phi_lo < phi_hi, got ({phi_lo}, {phi_hi})")
    return phi_lo, phi_hi


def log_occupancy(phis: np.ndarray) -> np.ndarray:
    """ln n = -ln(e^Φ - 1), evaluated as -(Φ + ln(1 - e^-Φ)) so large Φ does not overflow."""
    phis = np.asarray(phis, dtype=np.float64)
    return -(phis + np.log(-np.expm1(-phis)))


def loglog_curve(
    phi_lo: PhiLike,
    phi_hi: PhiLike,
    points: int,
    spacing: str = "log",
) -> List[LogLogSample]:
    """
    Sample (ln Φ, ln n) between phi_lo and phi_hi.

    Args:
        phi_lo, phi_hi: Φ range, 0 < phi_lo < phi_hi
        points: number of samples, at least 2
        spacing: "log" (default) or "linear" spacing in Φ
    """
    phi_lo, phi_hi = _check_window(phi_lo, phi_hi)
    if points < 2:
        raise DomainError("need at least 2 points")
    if spacing == "log":
        phis = np.geomspace(phi_lo, phi_hi, points)
    elif spacing == "linear":
        phis = np.linspace(phi_lo, phi_hi, points)
    else:
        raise DomainError(f"unknown spacing: {spacing!r}")

    ln_n = log_occupancy(phis)
    return [
        LogLogSample(ln_phi=float(lp), ln_n=float(ln))
        for lp, ln in zip(np.log(phis), ln_n)
    ]


def local_slope(phi: PhiLike) -> float:
    """
    Analytic d ln n / d ln Φ = -Φ e^Φ / (e^Φ - 1).

    Tends to -1 as Φ -> 0 and to -Φ as Φ -> infinity.
    """
    value = as_phi(phi)
    return value / math.expm1(-value)


def field_transform(samples: Sequence[LogLogSample]) -> List[LogLogSample]:
    """Re-express the abscissa as ln E = ln Φ / 2; samples already on the field axis pass through."""
    return [sample.model_copy(update={"abscissa": Abscissa.FIELD}) for sample in samples]


def fit_slope(samples: Sequence[LogLogSample], window: Tuple[float, float]) -> SlopeEstimate:
    """
    Ordinary least squares of ln n on the plotted abscissa for samples with Φ in the window.

    Raises:
        DomainError: on an invalid window or fewer than 3 samples inside it
    """
    phi_lo, phi_hi = _check_window(*window)
    ln_lo, ln_hi = math.log(phi_lo), math.log(phi_hi)
    tolerance = 1e-12 * max(1.0, abs(ln_lo), abs(ln_hi))
    inside = [s for s in samples if ln_lo - tolerance <= s.ln_phi <= ln_hi + tolerance]
    if len(inside) < MIN_FIT_POINTS:
        raise DomainError(
            f"need at least {MIN_FIT_POINTS} samples in window ({phi_lo}, {phi_hi}), got {len(inside)}"
        )
    axes = {s.abscissa for s in inside}
    if len(axes) > 1:
        raise DomainError("cannot fit samples with mixed abscissas")

    if phi_hi > 1.0:
        logger.warning(
            f"fit window ({phi_lo:g}, {phi_hi:g}) reaches the exponential-truncation regime (phi > 1); "
            "ln n is not linear in ln phi there"
        )

    x = np.array([s.ln_x for s in inside])
    y = np.array([s.ln_n for s in inside])
    slope, intercept = np.polyfit(x, y, 1)
    residual = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return SlopeEstimate(
        slope=float(slope),
        intercept=float(intercept),
        window=(phi_lo, phi_hi),
        residual=residual,
        points=len(inside),
        abscissa=axes.pop(),
    )


def occupancy_balance(phis: Sequence[float]) -> OccupancyBalance:
    """
    Split the quanta of an equilibrium Φ grid into poor (Φ < 1) and rich (Φ > 1) bosons.

    At one temperature, modes below the average energy hold far more quanta
    than the lucky high-energy ones.
    """
    phis = np.asarray(phis, dtype=np.float64)
    n = occupancy_array(phis)
    poor, rich = phis < 1.0, phis > 1.0
    return OccupancyBalance(
        poor=float(n[poor].sum()),
        rich=float(n[rich].sum()),
        poor_modes=int(poor.sum()),
        rich_modes=int(rich.sum()),
    )
