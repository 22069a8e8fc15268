"""
Hook-law oscillator energetics and Carnot amplification.

This package provides:
- HookOscillator, Amplification, RegimeSummary: models
- hook_energy, oscillator_temperature, carnot_efficiency, min_work, amplify
- actual_work, bath_entropy_gain: off-resonance and relaxation what-ifs
- table1_summary: the two-regime property table
"""

from .models import Amplification, ColumnKind, HookOscillator, RegimeSummary
from .oscillator import (
    actual_work,
    amplify,
    bath_entropy_gain,
    carnot_efficiency,
    hook_energy,
    min_work,
    oscillator_temperature,
    photon_mode_energy,
)
from .table import table1_summary

__all__ = [
    "Amplification", "ColumnKind", "HookOscillator", "RegimeSummary",
    "actual_work", "amplify", "bath_entropy_gain", "carnot_efficiency", "hook_energy",
    "min_work", "oscillator_temperature", "photon_mode_energy",
    "table1_summary",
]
