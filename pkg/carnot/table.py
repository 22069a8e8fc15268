"""
Two-regime property table of the Bose-Einstein gas.

Both columns are evaluated at the exact occupancy n = 1/(e^Φ - 1); a column is
flagged applicable only when n lies inside its regime.

| property     | high occupation (n >> 1) | canonic (n << 1)       |
|--------------|--------------------------|------------------------|
| temperature  | T = nhν/k_B              | T = -hν/(k_B ln n)     |
| equilibrium  | p = 1/2                  | p = 1/(1 + e^Φ)        |
| mode entropy | ln 2                     | -n ln n                |
| distribution | power-law                | exponential            |
| Carnot role  | amplifier                | heat engine            |
"""

import logging
import math
from typing import List, Optional, Tuple

from carnot.models import ColumnKind, RegimeSummary
from config import RegimeThresholds, load_regime_thresholds
from information.entropy import canonic_fraction
from modes.constants import CODATA, PhysicalConstants
from modes.errors import DomainError
from modes.models import PhiLike, Regime
from modes.statistics import as_phi, auto_regime, canonic_ensemble_entropy, occupancy

logger = logging.getLogger(__name__)


def _high_occupation(n: float, freq: float, consts: PhysicalConstants, applicable: bool) -> RegimeSummary:
    warnings: List[str] = []
    if not applicable:
        warnings.append(f"high-occupation formulas evaluated at n={n:.6g}, outside their regime")
    return RegimeSummary(
        regime=ColumnKind.HIGH_OCCUPATION,
        occupancy=n,
        temperature=n * consts.h * freq / consts.k_B,
        equilibrium_p=0.5,
        entropy=math.log(2.0),
        distribution="Power-law",
        carnot_role="Amplifier",
        applicable=applicable,
        warnings=warnings,
    )


def _canonic(n: float, phi: float, freq: float, consts: PhysicalConstants, applicable: bool) -> RegimeSummary:
    warnings: List[str] = []
    temperature: Optional[float] = None
    entropy: Optional[float] = None
    if n < 1 and not math.isclose(n, 1.0, rel_tol=1e-12):
        temperature = -consts.h * freq / (consts.k_B * math.log(n))
        entropy = canonic_ensemble_entropy(n, 1)
    else:
        warnings.append(f"canonic temperature and entropy are undefined at n={n:.6g} (need n < 1)")
    if not applicable:
        warnings.append(f"canonic formulas evaluated at n={n:.6g}, outside their regime")
    return RegimeSummary(
        regime=ColumnKind.CANONIC,
        occupancy=n,
        temperature=temperature,
        equilibrium_p=canonic_fraction(phi),
        entropy=entropy,
        distribution="Exponential",
        carnot_role="Heat engine",
        applicable=applicable,
        warnings=warnings,
    )


def table1_summary(
    phi: PhiLike,
    freq: float,
    consts: PhysicalConstants = CODATA,
    thresholds: RegimeThresholds = None,
) -> Tuple[RegimeSummary, RegimeSummary]:
    """
    Evaluate the high-occupation and canonic columns at Φ for a mode of frequency `freq` (Hz).

    Returns:
        (high_occupation, canonic) summaries with applicability flags and warnings
    """
    value = as_phi(phi)
    if not (math.isfinite(freq) and freq > 0):
        raise DomainError("frequency must be positive")
    thresholds = thresholds or load_regime_thresholds()
    n = occupancy(value)
    regime = auto_regime(n, thresholds)

    high = _high_occupation(n, freq, consts, regime is Regime.CLASSICAL)
    canonic = _canonic(n, value, freq, consts, regime is Regime.QUANTUM)
    for column in (high, canonic):
        for warning in column.warnings:
            logger.warning(warning)
    return high, canonic
