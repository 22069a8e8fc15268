"""
Subcommand implementations.

Each cmd_* function takes the parsed argparse namespace and returns a Report.
Flag combinations argparse cannot express are rejected with UsageError
(exit 2); numeric domain problems surface as EntropyModesError (exit 1).
"""

import logging
import math
from typing import Any, Dict, List, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

from benford import benford_pmf, conformance, digit_histogram
from carnot import HookOscillator, amplify, carnot_efficiency, table1_summary
from cli.ingest import csv_column, number_lines, read_input_bytes
from cli.output import loglog_rows, pmf_rows, trajectory_row, tsv_lines, write_text
from cli.report import Report, digest_bytes, digest_params
from config import MadThresholds, default_seed, load_mad_thresholds, load_regime_thresholds
from information import (
    BitFileStats,
    EntropyBudget,
    InformationMethod,
    bit_stats,
    clausius_check,
    h_function,
    normalized_information,
    shannon_information,
)
from information.entropy import LN2
from modes import (
    CODATA,
    DomainError,
    Regime,
    RegimeError,
    auto_regime,
    canonic_occupancy,
    frequency_of_wavelength,
    mode_entropy,
    mode_temperature,
    occupancy,
    phi_of_mode,
    phi_of_occupancy,
)
from powerlaw import field_transform, fit_slope, local_slope, loglog_curve, occupancy_balance
from simulation import OccupancySummary, SimConfig, benford_of_occupancies, geometric_ratio, run, run_replicas
from simulation.chain import rng_metadata

logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)

# namespace keys that are plumbing, not parameters
_NOT_PARAMS = {"func", "command", "log_level", "report"}


class UsageError(Exception):
    """Missing, conflicting or malformed flags."""


def build(model: Type[ModelT], **fields: Any) -> ModelT:
    """Construct a domain model, reporting validation failures as DomainError."""
    try:
        return model(**fields)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first.get("loc", ())) or model.__name__
        raise DomainError(f"{where}: {first['msg']}")


def params_of(args) -> Dict[str, Any]:
    return {key: value for key, value in sorted(vars(args).items()) if key not in _NOT_PARAMS}


def parse_pair(text: str, flag: str) -> Tuple[float, float]:
    """Parse "a,b" into two floats."""
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"{flag} expects two comma-separated numbers, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise UsageError(f"{flag} expects two comma-separated numbers, got {text!r}")


def _given(*values: Any) -> int:
    return sum(value is not None for value in values)


# ---------------------------------------------------------------------------
# modes
# ---------------------------------------------------------------------------

def cmd_modes(args) -> Report:
    """Occupancy, Φ, temperature and per-mode entropy of a single mode."""
    if _given(args.phi, args.n, args.temp_k) != 1:
        raise UsageError("give exactly one of --phi, --n or --temp-k")
    if args.freq_hz is not None and args.wavelength_m is not None:
        raise UsageError("--freq-hz and --wavelength-m are mutually exclusive")
    freq = args.freq_hz
    if args.wavelength_m is not None:
        freq = frequency_of_wavelength(args.wavelength_m)
    if args.temp_k is not None and freq is None:
        raise UsageError("--temp-k needs --freq-hz or --wavelength-m")

    if args.n is not None:
        n = args.n
        phi = phi_of_occupancy(n)
    else:
        phi = args.phi if args.phi is not None else phi_of_mode(freq, args.temp_k)
        n = occupancy(phi)

    auto = auto_regime(n, load_regime_thresholds())
    regime = auto if args.regime == "auto" else Regime(args.regime)
    if regime is not auto:
        logger.warning(f"{regime.value} formulas applied at n={n:.6g}, which lies in the {auto.value} regime")

    try:
        entropy = mode_entropy(n, regime)
    except RegimeError as e:
        logger.warning(str(e))
        entropy = None

    results: Dict[str, Any] = {
        "phi": phi,
        "occupancy": n,
        "canonic_occupancy": canonic_occupancy(phi),
        "regime": regime.value,
        "auto_regime": auto.value,
        "entropy_kb": entropy,
        "entropy_j_per_k": entropy * CODATA.k_B if entropy is not None else None,
        "entropy_exact_kb": mode_entropy(n, Regime.EXACT),
    }
    if freq is not None:
        results["frequency_hz"] = freq
        results["temperature_k"] = args.temp_k if args.temp_k is not None else mode_temperature(n, freq)

    params = params_of(args)
    return Report(command="modes", params=params, input_digest=digest_params(params), results=results)


# ---------------------------------------------------------------------------
# entropy
# ---------------------------------------------------------------------------

def _entropy_stats(args) -> Tuple[BitFileStats, str]:
    if args.file is not None:
        if args.lambda_ is not None or args.ones is not None:
            raise UsageError("--file cannot be combined with --lambda/--ones")
        data = read_input_bytes(args.file)
        return bit_stats(data, raw=args.raw), digest_bytes(data)
    if args.raw:
        raise UsageError("--raw needs --file")
    if args.lambda_ is None or args.ones is None:
        raise UsageError("give --file, or both --lambda and --ones")
    stats = build(BitFileStats, length=args.lambda_, ones=args.ones)
    return stats, digest_params(params_of(args))


def cmd_entropy(args) -> Report:
    """Information, H-function, normalized information and Clausius margin of a binary file."""
    stats, digest = _entropy_stats(args)
    method = InformationMethod(args.method)
    info = shannon_information(stats, method)
    scale = LN2 if args.units == "bits" else 1.0

    # default S = Λ k_B, the entropy removed from a source of Λ harmonic modes
    entropy_kb = args.entropy_kb if args.entropy_kb is not None else float(stats.length)
    budget = build(EntropyBudget, S=entropy_kb, m=args.m, I=info)
    clausius = clausius_check(budget)

    results = {
        "length": stats.length,
        "ones": stats.ones,
        "p": stats.p,
        "method": method.value,
        "units": args.units,
        "information": info.value / scale,
        "information_nats": info.value,
        "h_function_kb": h_function(stats),
        "normalized_information": normalized_information(stats.p),
        "clausius": {
            "entropy_kb": budget.S,
            "k_kb": budget.K,
            "status": clausius.status.value,
            "margin_kb": clausius.margin,
        },
    }
    return Report(command="entropy", params=params_of(args), input_digest=digest, results=results)


# ---------------------------------------------------------------------------
# benford
# ---------------------------------------------------------------------------

def _thresholds(text: Optional[str]) -> MadThresholds:
    if text is None:
        return load_mad_thresholds()
    close, acceptable = parse_pair(text, "--thresholds")
    if not (0 < close <= acceptable):
        raise UsageError("--thresholds needs 0 < close <= acceptable")
    return MadThresholds(close=close, acceptable=acceptable)


def cmd_benford(args) -> Report:
    """Score a dataset's leading digits against log_b(1 + 1/d)."""
    if args.file is not None and args.csv is not None:
        raise UsageError("--file and --csv are mutually exclusive")
    if args.column is not None and args.csv is None:
        raise UsageError("--column needs --csv")
    if args.csv is not None and args.column is None:
        raise UsageError("--csv needs --column")
    if args.file is None and args.csv is None and args.emit_pmf is None:
        raise UsageError("give --file or --csv (or --emit-pmf alone)")
    thresholds = _thresholds(args.thresholds)
    reference = benford_pmf(args.base)

    if args.emit_pmf is not None:
        write_text(args.emit_pmf, tsv_lines(pmf_rows(reference)))

    results: Dict[str, Any] = {
        "base": args.base,
        "expected": {str(d): p for d, p in reference.as_dict().items()},
    }
    digest = digest_params(params_of(args))
    if args.file is not None or args.csv is not None:
        if args.file is not None:
            data = read_input_bytes(args.file)
            values, empty = number_lines(data, args.file), 0
        else:
            data = read_input_bytes(args.csv)
            values, empty = csv_column(data, args.column, header=not args.no_header, source=args.csv)
        digest = digest_bytes(data)
        hist = digit_histogram(values, args.base, skipped=empty)
        scored = conformance(hist, reference, thresholds)
        results.update({
            "total": hist.total,
            "skipped": hist.skipped,
            "counts": {str(d): c for d, c in hist.as_dict().items()},
            "observed": {str(d): f for d, f in enumerate(scored.observed, start=1)},
            "chi2": scored.chi2,
            "dof": scored.dof,
            "p_value": scored.p_value,
            "mad": scored.mad,
            "verdict": scored.verdict.value,
        })
    return Report(command="benford", params=params_of(args), input_digest=digest, results=results)


# ---------------------------------------------------------------------------
# powerlaw
# ---------------------------------------------------------------------------

def cmd_powerlaw(args) -> Report:
    """Sample the log-log occupancy curve and fit its slope inside a Φ window."""
    window = None
    if args.fit_window is not None:
        window = parse_pair(args.fit_window, "--fit-window")
        lo, hi = window
        if not (math.isfinite(lo) and math.isfinite(hi) and 0 < lo < hi):
            raise UsageError(f"--fit-window needs 0 < lo < hi, got {args.fit_window!r}")

    samples = loglog_curve(args.phi_lo, args.phi_hi, args.points, spacing=args.spacing)
    if args.field:
        samples = field_transform(samples)
    if args.out is not None:
        write_text(args.out, tsv_lines(loglog_rows(samples)))

    phis = [sample.phi for sample in samples]
    balance = occupancy_balance(phis)
    results: Dict[str, Any] = {
        "points": len(samples),
        "abscissa": samples[0].abscissa.value,
        "spacing": args.spacing,
        "occupancy_balance": balance.model_dump(),
    }
    if window is not None:
        try:
            estimate = fit_slope(samples, window)
        except DomainError as e:
            raise UsageError(f"invalid --fit-window: {e}")
        midpoint = math.sqrt(window[0] * window[1])
        factor = 2.0 if args.field else 1.0
        results["fit"] = {
            "slope": estimate.slope,
            "intercept": estimate.intercept,
            "residual": estimate.residual,
            "points": estimate.points,
            "window": list(estimate.window),
            "local_slope_at_midpoint": factor * local_slope(midpoint),
        }
    params = params_of(args)
    return Report(command="powerlaw", params=params, input_digest=digest_params(params), results=results)


# ---------------------------------------------------------------------------
# simulate
# ---------------------------------------------------------------------------

def _sim_config(args) -> SimConfig:
    seed = args.seed
    if seed is None:
        seed = default_seed()
    try:
        return SimConfig(
            modes=args.modes,
            quanta=args.quanta,
            steps=args.steps,
            burn_in=args.burn_in,
            seed=seed if seed is not None else 0,
            init=args.init,
        )
    except ValidationError as e:
        first = e.errors()[0]
        raise UsageError(f"invalid simulation config: {first['msg']}")


def _sparse_occupancies(summary: OccupancySummary) -> Dict[str, Any]:
    """
    Histogram and reference keyed by the occupation values actually seen.

    Report size grows with the number of distinct values, not with Q/M.
    """
    seen = [n for n, count in enumerate(summary.histogram) if count]
    reference: Dict[str, Any] = {
        "law": "geometric",
        "mean": summary.mean,
        "ratio": geometric_ratio(summary.mean) if summary.mean > 0 else 0.0,
        "pmf": {str(n): summary.reference[n] for n in seen},
        "tail_mass": summary.reference_tail,
    }
    return {"histogram": {str(n): summary.histogram[n] for n in seen}, "reference": reference}


def cmd_simulate(args) -> Report:
    """Run the exchange chain and compare its occupancy histogram with the geometric law."""
    if args.replicas < 1:
        raise UsageError("--replicas must be at least 1")
    if args.trajectory is not None and args.replicas > 1:
        raise UsageError("--trajectory records a single chain; drop --replicas")
    config = _sim_config(args)

    if args.trajectory is not None:
        rows: List[str] = []
        summary = run(config, on_snapshot=lambda step, counts: rows.append(trajectory_row(step, counts)))
        write_text(args.trajectory, "".join(rows))
    elif args.replicas > 1:
        summary = run_replicas(config, args.replicas, workers=args.workers)
    else:
        summary = run(config)

    results: Dict[str, Any] = summary.model_dump(
        mode="json", exclude={"rng", "histogram", "reference", "reference_tail"})
    results.update(_sparse_occupancies(summary))
    if args.benford_digits:
        digits = benford_of_occupancies(summary)
        scored = conformance(digits, benford_pmf(digits.base))
        results["benford"] = {
            "counts": {str(d): c for d, c in digits.as_dict().items()},
            "skipped": digits.skipped,
            "chi2": scored.chi2,
            "p_value": scored.p_value,
            "mad": scored.mad,
            "verdict": scored.verdict.value,
        }

    params = params_of(args)
    params.update(config.model_dump(mode="json"))
    return Report(
        command="simulate",
        params=params,
        input_digest=digest_params(params),
        results=results,
        rng=summary.rng or rng_metadata(config.seed),
    )


# ---------------------------------------------------------------------------
# carnot
# ---------------------------------------------------------------------------

def cmd_carnot(args) -> Report:
    """Oscillator amplification, a bare Carnot efficiency, or the two-regime table."""
    amp_mode = _given(args.kappa, args.amp_low, args.amp_high) > 0
    temp_mode = _given(args.t_low, args.t_high) > 0
    if sum((amp_mode, temp_mode, args.table1)) != 1:
        raise UsageError("give one of: --kappa/--amp-low/--amp-high, --t-low/--t-high, or --table1")

    results: Dict[str, Any]
    if amp_mode:
        if _given(args.kappa, args.amp_low, args.amp_high) != 3:
            raise UsageError("--kappa, --amp-low and --amp-high go together")
        low = build(HookOscillator, kappa=args.kappa, amplitude=args.amp_low)
        high = build(HookOscillator, kappa=args.kappa, amplitude=args.amp_high)
        results = amplify(low, high, waste_fraction=args.waste_fraction).model_dump()
    elif temp_mode:
        if _given(args.t_low, args.t_high) != 2:
            raise UsageError("--t-low and --t-high go together")
        results = {"efficiency": carnot_efficiency(args.t_low, args.t_high)}
    else:
        if args.phi is None or args.freq_hz is None:
            raise UsageError("--table1 needs --phi and --freq-hz")
        high, canonic = table1_summary(args.phi, args.freq_hz)
        results = {"columns": [high.model_dump(mode="json"), canonic.model_dump(mode="json")]}

    params = params_of(args)
    return Report(command="carnot", params=params, input_digest=digest_params(params), results=results)
