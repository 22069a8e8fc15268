"""
Information accounting for binary files.

This package provides:
- BitFileStats, InfoNats, EntropyBudget: validated (Λ, L, p), nats and S/K/I budgets
- shannon_information, h_function, normalized_information, clausius_check
- canonic_fraction: two-level equilibrium p = 1/(1 + e^Φ)
- bit_stats: counting Λ and L from text or raw bytes
"""

from .bitstream import bit_stats, parse_bit_text, unpack_bytes
from .entropy import (
    canonic_fraction,
    clausius_check,
    h_function,
    normalized_information,
    shannon_information,
    two_level_free_energy,
)
from .models import (
    BitFileStats,
    ClausiusResult,
    ClausiusStatus,
    EntropyBudget,
    InfoNats,
    InformationMethod,
)

__all__ = [
    "bit_stats", "parse_bit_text", "unpack_bytes",
    "canonic_fraction", "clausius_check", "h_function", "normalized_information",
    "shannon_information", "two_level_free_energy",
    "BitFileStats", "ClausiusResult", "ClausiusStatus", "EntropyBudget", "InfoNats",
    "InformationMethod",
]
