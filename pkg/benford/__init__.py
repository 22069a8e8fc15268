"""
Benford's law from digit-mode equilibrium, plus empirical conformance testing.

This package provides:
- digit_density, benford_pmf, equilibrium_digit_distribution: the equilibrium derivation
- digit_mode_phis, digit_mode_frequencies: Φ vectors and spectral-filter frequencies
- first_digit, digit_histogram, merge_histograms: dataset side
- conformance: χ², MAD and verdict
"""

from .conformance import conformance, mad_verdict
from .digits import digit_histogram, first_digit, merge_histograms
from .distribution import (
    benford_pmf,
    digit_density,
    digit_mode_frequencies,
    digit_mode_phis,
    equilibrium_digit_distribution,
)
from .models import ConformanceReport, DigitDistribution, DigitHistogram, Verdict

__all__ = [
    "conformance", "mad_verdict",
    "digit_histogram", "first_digit", "merge_histograms",
    "benford_pmf", "digit_density", "digit_mode_frequencies", "digit_mode_phis",
    "equilibrium_digit_distribution",
    "ConformanceReport", "DigitDistribution", "DigitHistogram", "Verdict",
]
