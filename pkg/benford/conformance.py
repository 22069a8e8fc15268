"""
First-digit conformance scoring.

Pearson χ² against the reference distribution plus the mean absolute
deviation (MAD) of digit frequencies, with MAD verdict cut-offs in the
style of forensic-audit first-digit tests.
"""

import logging

import numpy as np
from scipy import stats

from benford.models import ConformanceReport, DigitDistribution, DigitHistogram, Verdict
from config import MadThresholds, load_mad_thresholds
from modes.errors import DomainError

logger = logging.getLogger(__name__)


def mad_verdict(mad: float, thresholds: MadThresholds) -> Verdict:
    if mad < thresholds.close:
        return Verdict.CLOSE
    if mad < thresholds.acceptable:
        return Verdict.ACCEPTABLE
    return Verdict.NONCONFORMING


def conformance(
    hist: DigitHistogram,
    ref: DigitDistribution,
    thresholds: MadThresholds = None,
) -> ConformanceReport:
    """
    Score an observed digit histogram against a reference distribution.

    Args:
        hist: observed leading-digit counts
        ref: expected digit probabilities of the same base
        thresholds: MAD cut-offs; defaults come from the environment

    Returns:
        ConformanceReport with χ² (dof = b - 2), its p-value, MAD and verdict

    Raises:
        DomainError: on a base mismatch or an empty histogram
    """
    thresholds = thresholds or load_mad_thresholds()
    if hist.base != ref.base:
        raise DomainError(f"histogram base {hist.base} does not match reference base {ref.base}")
    if hist.total == 0:
        raise DomainError("no leading digits to score (every entry was skipped)")

    observed = np.asarray(hist.counts, dtype=np.float64)
    expected_probs = np.asarray(ref.probs, dtype=np.float64)
    expected = hist.total * expected_probs
    frequencies = observed / hist.total

    chi2 = float(np.sum((observed - expected) ** 2 / expected))
    dof = hist.base - 2
    p_value = float(stats.chi2.sf(chi2, dof)) if dof > 0 else None
    mad = float(np.mean(np.abs(frequencies - expected_probs)))
    verdict = mad_verdict(mad, thresholds)
    logger.info(f"conformance: n={hist.total} chi2={chi2:.4f} mad={mad:.6f} -> {verdict.value}")

    return ConformanceReport(
        chi2=chi2,
        dof=dof,
        p_value=p_value,
        mad=mad,
        verdict=verdict,
        observed=frequencies.tolist(),
        expected=expected_probs.tolist(),
    )
