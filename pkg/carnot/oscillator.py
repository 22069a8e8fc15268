"""
Oscillator energetics and Carnot amplification.

A lone harmonic mode with energy E behaves as a heat bath at T = E/k_B, so
amplifying it from E_L to E_H by resonant work W = E_H - E_L has efficiency
W/E_H = 1 - T_L/T_H, the Carnot efficiency.
"""

import math

from carnot.models import Amplification, HookOscillator
from modes.constants import CODATA, PhysicalConstants
from modes.errors import DomainError
from modes.models import PhiLike
from modes.statistics import canonic_ensemble_entropy, frequency_of_wavelength, occupancy


def _check_energy(energy: float, name: str = "energy") -> float:
    energy = float(energy)
    if not math.isfinite(energy) or energy < 0:
        raise DomainError(f"{name} must be a non-negative finite number, got {energy}")
    return energy


def hook_energy(osc: HookOscillator) -> float:
    """E = ½κA² (J)."""
    return 0.5 * osc.kappa * osc.amplitude ** 2


def oscillator_temperature(energy: float, consts: PhysicalConstants = CODATA) -> float:
    """T = E/k_B for a single harmonic mode."""
    return _check_energy(energy) / consts.k_B


def photon_mode_energy(photons: float, wavelength: float, consts: PhysicalConstants = CODATA) -> float:
    """Energy n·hc/λ of a mode holding `photons` quanta at vacuum wavelength λ (m)."""
    photons = _check_energy(photons, "photon number")
    return photons * consts.h * frequency_of_wavelength(wavelength, consts)


def carnot_efficiency(t_low: float, t_high: float) -> float:
    """
    1 - T_L/T_H.

    Raises:
        DomainError: if a temperature is not positive or T_L > T_H
    """
    if not (math.isfinite(t_low) and math.isfinite(t_high)) or t_low <= 0 or t_high <= 0:
        raise DomainError("temperatures must be positive")
    if t_low > t_high:
        raise DomainError(f"T_L ({t_low}) must not exceed T_H ({t_high})")
    return 1.0 - t_low / t_high


def min_work(energy_low: float, energy_high: float) -> float:
    """Resonant work W_min = E_H - E_L needed to raise the oscillator."""
    energy_low = _check_energy(energy_low, "E_L")
    energy_high = _check_energy(energy_high, "E_H")
    if energy_high < energy_low:
        raise DomainError(f"E_H ({energy_high}) must not be below E_L ({energy_low})")
    return energy_high - energy_low


def actual_work(energy_low: float, energy_high: float, waste_fraction: float = 0.0) -> float:
    """
    Work applied off resonance when `waste_fraction` of it is lost, W_min/(1 - w).

    What-if figure only: no coupling model stands behind the waste fraction.
    """
    if not (0.0 <= waste_fraction < 1.0):
        raise DomainError(f"waste fraction must lie in [0, 1), got {waste_fraction}")
    return min_work(energy_low, energy_high) / (1.0 - waste_fraction)


def amplify(
    low: HookOscillator,
    high: HookOscillator,
    waste_fraction: float = 0.0,
    consts: PhysicalConstants = CODATA,
) -> Amplification:
    """Energies, temperatures, work and efficiency of raising `low` to `high`."""
    energy_low, energy_high = hook_energy(low), hook_energy(high)
    t_low = oscillator_temperature(energy_low, consts)
    t_high = oscillator_temperature(energy_high, consts)
    work = min_work(energy_low, energy_high)
    return Amplification(
        energy_low=energy_low,
        energy_high=energy_high,
        temperature_low=t_low,
        temperature_high=t_high,
        min_work=work,
        efficiency=carnot_efficiency(t_low, t_high) if t_low > 0 else None,
        waste_fraction=waste_fraction,
        actual_work=actual_work(energy_low, energy_high, waste_fraction),
    )


def bath_entropy_gain(length: int, phi_before: PhiLike, phi_after: PhiLike) -> float:
    """
    Entropy change (k_B) of a bath of Λ canonic modes whose Φ moves from
    `phi_before` to `phi_after`. Absorbing energy lowers Φ and raises the entropy.
    """
    if length < 1:
        raise DomainError("bath must hold at least one mode")
    before = canonic_ensemble_entropy(occupancy(phi_before), length)
    after = canonic_ensemble_entropy(occupancy(phi_after), length)
    return after - before
