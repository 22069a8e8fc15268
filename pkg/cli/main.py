#!/usr/bin/env python3
"""
entropy-modes command line.

Subcommands map one-to-one onto the library packages. The JSON report goes
to stdout (or --report PATH); logs go to stderr.

Exit codes: 0 success, 1 domain or data error, 2 usage error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from cli.commands import (
    UsageError,
    cmd_benford,
    cmd_carnot,
    cmd_entropy,
    cmd_modes,
    cmd_powerlaw,
    cmd_simulate,
)
from cli.output import STDOUT, write_text
from cli.report import collect_warnings
from config import LOG_LEVEL, VERSION
from modes.errors import EntropyModesError, OutputError

logger = logging.getLogger(__name__)

LOG_LEVELS = ["debug", "info", "warning", "error"]


def _add_modes(subparsers) -> None:
    p = subparsers.add_parser("modes", help="Occupancy, temperature and entropy of one mode")
    p.add_argument("--phi", type=float, help="Relative boson energy Φ = hν/k_BT")
    p.add_argument("--n", type=float, help="Mean occupation number")
    p.add_argument("--temp-k", type=float, help="Mode temperature in kelvin (needs a frequency)")
    p.add_argument("--freq-hz", type=float, help="Mode frequency in Hz")
    p.add_argument("--wavelength-m", type=float, help="Vacuum wavelength in meters, instead of --freq-hz")
    p.add_argument("--regime", choices=["auto", "quantum", "classical", "exact"], default="auto",
                   help="Entropy formula (default: auto by occupancy)")
    p.set_defaults(func=cmd_modes)


def _add_entropy(subparsers) -> None:
    p = subparsers.add_parser("entropy", help="Information content of a binary file")
    p.add_argument("--file", help="Bitstream file of '0'/'1' characters ('-' for stdin)")
    p.add_argument("--raw", action="store_true", help="Read --file as raw bytes, unpacked MSB-first")
    p.add_argument("--lambda", dest="lambda_", type=int, help="Number of modes Λ")
    p.add_argument("--ones", type=int, help="Number of energetic bits L")
    p.add_argument("--method", choices=["stirling", "exact"], default="stirling",
                   help="Information formula (default: stirling)")
    p.add_argument("--units", choices=["nats", "bits"], default="nats", help="Information units")
    p.add_argument("--m", type=int, default=1, help="Entropy units k_B per bit (default: 1)")
    p.add_argument("--entropy-kb", type=float, help="Source entropy S in k_B units (default: Λ)")
    p.set_defaults(func=cmd_entropy)


def _add_benford(subparsers) -> None:
    p = subparsers.add_parser("benford", help="First-digit conformance of a dataset")
    p.add_argument("--file", help="Newline-delimited numbers ('-' for stdin)")
    p.add_argument("--csv", help="CSV file to read a column from")
    p.add_argument("--column", help="CSV column name or 0-based index")
    p.add_argument("--no-header", action="store_true", help="CSV has no header row")
    p.add_argument("--base", type=int, default=10, help="Number base (default: 10)")
    p.add_argument("--emit-pmf", nargs="?", const=STDOUT, metavar="PATH",
                   help="Write the digit probabilities as TSV (stdout when PATH is omitted)")
    p.add_argument("--thresholds", metavar="CLOSE,ACCEPTABLE", help="MAD verdict cut-offs")
    p.set_defaults(func=cmd_benford)


def _add_powerlaw(subparsers) -> None:
    p = subparsers.add_parser("powerlaw", help="Log-log occupancy curve and slope fit")
    p.add_argument("--phi-lo", type=float, required=True, help="Lowest Φ")
    p.add_argument("--phi-hi", type=float, required=True, help="Highest Φ")
    p.add_argument("--points", type=int, default=50, help="Number of samples (default: 50)")
    p.add_argument("--spacing", choices=["log", "linear"], default="log", help="Φ spacing (default: log)")
    p.add_argument("--field", action="store_true", help="Plot against field amplitude (Φ ∝ E²)")
    p.add_argument("--fit-window", metavar="LO,HI", help="Φ window for the least-squares slope")
    p.add_argument("--out", metavar="PATH", help="Write (ln x, ln n) samples as TSV ('-' for stdout)")
    p.set_defaults(func=cmd_powerlaw)


def _add_simulate(subparsers) -> None:
    p = subparsers.add_parser("simulate", help="Monte Carlo exchange of quanta among modes")
    p.add_argument("--modes", type=int, required=True, help="Number of modes M")
    p.add_argument("--quanta", type=int, required=True, help="Number of quanta Q")
    p.add_argument("--steps", type=int, required=True, help="Number of move attempts")
    p.add_argument("--burn-in", type=int, help="Steps discarded before sampling (default: 10%% of steps)")
    p.add_argument("--seed", type=int, help="64-bit seed (default: ENTROPY_MODES_SEED or 0)")
    p.add_argument("--init", choices=["uniform", "all_in_one"], default="uniform",
                   help="Initial placement of quanta (default: uniform)")
    p.add_argument("--benford-digits", action="store_true",
                   help="Also report leading digits of the sampled occupancies")
    p.add_argument("--trajectory", metavar="PATH",
                   help="Write (step, occupation counts) of every snapshot as TSV")
    p.add_argument("--replicas", type=int, default=1, help="Independent chains to pool (default: 1)")
    p.add_argument("--workers", type=int, help="Worker processes for replicas (default: CPU count)")
    p.set_defaults(func=cmd_simulate)


def _add_carnot(subparsers) -> None:
    p = subparsers.add_parser("carnot", help="Oscillator amplification and the two-regime table")
    p.add_argument("--kappa", type=float, help="Spring constant (N/m)")
    p.add_argument("--amp-low", type=float, help="Initial amplitude (m)")
    p.add_argument("--amp-high", type=float, help="Amplified amplitude (m)")
    p.add_argument("--waste-fraction", type=float, default=0.0,
                   help="What-if share of work lost off resonance, in [0, 1) (default: 0)")
    p.add_argument("--t-low", type=float, help="Low temperature (K)")
    p.add_argument("--t-high", type=float, help="High temperature (K)")
    p.add_argument("--table1", action="store_true", help="Evaluate both columns of the regime table")
    p.add_argument("--phi", type=float, help="Φ for --table1")
    p.add_argument("--freq-hz", type=float, help="Mode frequency for --table1 (Hz)")
    p.set_defaults(func=cmd_carnot)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entropy-modes",
        description="Bose-Einstein information thermodynamics: mode statistics, file entropy, "
                    "Benford conformance, power-law slopes, equilibrium simulation and Carnot amplification",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument("--log-level", choices=LOG_LEVELS, default=LOG_LEVEL.lower(),
                        help="Logging level on stderr (default: ENTROPY_MODES_LOG_LEVEL or warning)")
    parser.add_argument("--report", default=STDOUT, metavar="PATH",
                        help="Where to write the JSON report (default: stdout)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    _add_modes(subparsers)
    _add_entropy(subparsers)
    _add_benford(subparsers)
    _add_powerlaw(subparsers)
    _add_simulate(subparsers)
    _add_carnot(subparsers)
    return parser


def _stdout_claimed(args) -> bool:
    """True when a TSV output of the command already went to stdout."""
    return STDOUT in (getattr(args, name, None) for name in ("emit_pmf", "out", "trajectory"))


def _setup_logging(level_name: str) -> logging.Handler:
    level = getattr(logging, level_name.upper(), logging.WARNING)
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger()
    root.addHandler(handler)
    # warnings must reach the report even when stderr shows errors only
    root.setLevel(min(level, logging.WARNING))
    return handler


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    handler = _setup_logging(args.log_level)
    try:
        with collect_warnings() as warnings:
            report = args.func(args)
        report = report.model_copy(update={"warnings": [*report.warnings, *(
            w for w in warnings if w not in report.warnings)]})
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return 2
    except EntropyModesError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    finally:
        logging.getLogger().removeHandler(handler)

    if args.report == STDOUT and _stdout_claimed(args):
        logger.info("stdout carries TSV output; report not printed (use --report PATH)")
    else:
        try:
            write_text(args.report, report.to_json())
        except OutputError as e:
            print(f"error: {e}", file=sys.stderr)
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
