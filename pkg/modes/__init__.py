"""
Bose-Einstein mode statistics.

This package provides:
- PhysicalConstants / CODATA: SI constants k_B, h, c
- PhiRatio, Mode, ModeEnsemble: validated mode types
- occupancy, phi_of_occupancy, canonic_occupancy, mode_temperature,
  mode_entropy, ensemble_entropy: closed forms in both limits
"""

from .constants import CODATA, PhysicalConstants
from .errors import ConservationError, DomainError, EntropyModesError, OutputError, ParseError, RegimeError
from .models import Mode, ModeEnsemble, PhiRatio, Regime
from .statistics import (
    auto_regime,
    canonic_ensemble_entropy,
    canonic_occupancy,
    ensemble_entropy,
    frequency_of_wavelength,
    mode_entropy,
    mode_temperature,
    occupancy,
    phi_of_mode,
    phi_of_occupancy,
)

__all__ = [
    "CODATA", "PhysicalConstants",
    "ConservationError", "DomainError", "EntropyModesError", "OutputError", "ParseError", "RegimeError",
    "Mode", "ModeEnsemble", "PhiRatio", "Regime",
    "auto_regime", "canonic_ensemble_entropy", "canonic_occupancy", "ensemble_entropy",
    "frequency_of_wavelength", "mode_entropy", "mode_temperature", "occupancy",
    "phi_of_mode", "phi_of_occupancy",
]
