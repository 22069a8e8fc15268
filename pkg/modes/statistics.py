"""
Bose-Einstein mode statistics.

Closed forms for a bosonic mode with zero chemical potential: occupancy,
the inverse Φ(n) = ln(1 + 1/n), mode temperature and per-mode entropy in the
general case and in both limits (quantum n << 1, high occupation n >> 1).

Entropies are dimensionless multiples of k_B.
"""

import math
from typing import Union

import numpy as np

from config import RegimeThresholds
from modes.constants import CODATA, PhysicalConstants
from modes.errors import DomainError, RegimeError
from modes.models import ModeEnsemble, PhiLike, PhiRatio, Regime


def as_phi(phi: PhiLike) -> float:
    """Validate Φ and return it as a float."""
    value = phi.phi if isinstance(phi, PhiRatio) else float(phi)
    if not math.isfinite(value):
        raise DomainError("phi must be finite")
    if value <= 0:
        raise DomainError("phi must be positive")
    return value


def _as_regime(regime: Union[Regime, str]) -> Regime:
    try:
        return Regime(regime)
    except ValueError:
        raise DomainError(f"unknown regime: {regime!r}")


def _check_occupancy(n: float, allow_zero: bool = False) -> float:
    n = float(n)
    if not math.isfinite(n):
        raise DomainError("occupancy must be finite")
    if n < 0 or (n == 0 and not allow_zero):
        raise DomainError("occupancy must be positive")
    return n


def occupancy(phi: PhiLike) -> float:
    """Mean occupation number 1/(e^Φ - 1)."""
    value = as_phi(phi)
    # expm1 keeps full precision for small Φ where e^Φ - 1 cancels
    return 1.0 / math.expm1(value) if value < 709.0 else math.exp(-value)


def phi_of_occupancy(n: float) -> float:
    """Φ = ln(1 + 1/n), the exact inverse of `occupancy`."""
    n = _check_occupancy(n)
    if n < 1.0:
        # 1/n overflows for subnormal n
        return math.log1p(n) - math.log(n)
    return math.log1p(1.0 / n)


def canonic_occupancy(phi: PhiLike) -> float:
    """Quantum-limit (canonic) occupancy e^-Φ, valid for Φ >> 1."""
    return math.exp(-as_phi(phi))


def phi_of_mode(frequency: float, temperature: float, consts: PhysicalConstants = CODATA) -> float:
    """Φ = hν/k_BT for a mode at `frequency` (Hz) and `temperature` (K)."""
    if not (math.isfinite(frequency) and frequency > 0):
        raise DomainError("frequency must be positive")
    if not (math.isfinite(temperature) and temperature > 0):
        raise DomainError("temperature must be positive")
    return consts.h * frequency / (consts.k_B * temperature)


def frequency_of_wavelength(wavelength: float, consts: PhysicalConstants = CODATA) -> float:
    """ν = c/λ for a vacuum wavelength in meters."""
    if not (math.isfinite(wavelength) and wavelength > 0):
        raise DomainError("wavelength must be positive")
    return consts.c / wavelength


def mode_temperature(n: float, freq: float, consts: PhysicalConstants = CODATA) -> float:
    """
    Temperature of a mode holding n quanta of frequency `freq`.

    Inverts the Bose-Einstein occupancy: T = hν / (k_B ln(1 + 1/n)). Reduces to
    -hν/(k_B ln n) for n << 1 and to nhν/k_B for n >> 1.

    Raises:
        DomainError: if n <= 0 or freq <= 0
    """
    phi = phi_of_occupancy(n)
    if not (math.isfinite(freq) and freq > 0):
        raise DomainError("frequency must be positive")
    return consts.h * freq / (consts.k_B * phi)


def auto_regime(n: float, thresholds: RegimeThresholds = RegimeThresholds()) -> Regime:
    """Pick the limit formula whose error stays below ~1% at occupancy n."""
    if n >= thresholds.classical_n:
        return Regime.CLASSICAL
    if n <= thresholds.quantum_n:
        return Regime.QUANTUM
    return Regime.EXACT


def mode_entropy(n: float, regime: Union[Regime, str] = Regime.EXACT) -> float:
    """
    Entropy of one mode in units of k_B.

    quantum:   -n ln n (requires n < 1)
    classical: 1, independent of n (harmonic oscillator; a lower bound for n >> 1)
    exact:     (1 + n) ln(1 + n) - n ln n, the full Bose-Einstein curve joining both limits

    An empty mode (n = 0) carries no entropy in every regime.
    """
    regime = _as_regime(regime)
    n = _check_occupancy(n, allow_zero=True)
    if n == 0:
        return 0.0
    if regime is Regime.QUANTUM:
        if n >= 1:
            raise RegimeError(f"quantum-limit entropy needs n < 1, got n={n}")
        return -n * math.log(n)
    if regime is Regime.CLASSICAL:
        return 1.0
    if n < 1.0:
        return (1.0 + n) * math.log1p(n) - n * math.log(n)
    # same value rearranged as ln(1 + n) + n ln(1 + 1/n); the direct form cancels for large n
    return math.log1p(n) + n * math.log1p(1.0 / n)


def ensemble_entropy(ensemble: ModeEnsemble, regime: Union[Regime, str] = Regime.EXACT) -> float:
    """
    Total entropy of a mode sequence (k_B units); entropy is extensive.

    For the classical regime this is exactly Λ, the lower bound S = Λ k_B.
    """
    regime = _as_regime(regime)
    return math.fsum(mode_entropy(mode.occupancy, regime) for mode in ensemble.modes)


def canonic_ensemble_entropy(n: float, length: int) -> float:
    """
    Equilibrium entropy of Λ equal canonic modes, Λ·n·Φ with Φ = -ln n (k_B units).

    This is S = Λq/T with q = nhν, the equal-occupancy case of the quantum sum.
    """
    n = _check_occupancy(n)
    if n >= 1:
        raise RegimeError(f"canonic ensemble entropy needs n < 1, got n={n}")
    if length < 1:
        raise DomainError("ensemble length must be at least 1")
    return length * n * -math.log(n)


def occupancy_array(phis: np.ndarray) -> np.ndarray:
    """Vectorized `occupancy` over an array of Φ values."""
    phis = np.asarray(phis, dtype=np.float64)
    if not np.all(np.isfinite(phis)) or np.any(phis <= 0):
        raise DomainError("phi must be positive")
    return 1.0 / np.expm1(phis)
