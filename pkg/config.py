import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

VERSION = "0.1.0"

ENTROPY_MODES_SEED = os.getenv("ENTROPY_MODES_SEED")
LOG_LEVEL = os.getenv("ENTROPY_MODES_LOG_LEVEL", "WARNING")

MAD_CLOSE = float(os.getenv("ENTROPY_MODES_MAD_CLOSE", "0.006"))
MAD_ACCEPTABLE = float(os.getenv("ENTROPY_MODES_MAD_ACCEPTABLE", "0.012"))

CLASSICAL_N = float(os.getenv("ENTROPY_MODES_CLASSICAL_N", "100"))
QUANTUM_N = float(os.getenv("ENTROPY_MODES_QUANTUM_N", "0.01"))


@dataclass(frozen=True)
class RegimeThresholds:
    """Occupancy bounds used to pick a limit formula automatically."""
    classical_n: float = 100.0   # n >= this -> high-occupation limit
    quantum_n: float = 0.01      # n <= this -> canonic limit


@dataclass(frozen=True)
class MadThresholds:
    """Nigrini-style MAD cut-offs for first-digit conformance (base 10)."""
    close: float = 0.006
    acceptable: float = 0.012


def load_regime_thresholds() -> RegimeThresholds:
    """
    Load regime thresholds from environment variables.

    Environment variables:
    - ENTROPY_MODES_CLASSICAL_N: classical-limit occupancy threshold
    - ENTROPY_MODES_QUANTUM_N: quantum-limit occupancy threshold
    """
    return RegimeThresholds(classical_n=CLASSICAL_N, quantum_n=QUANTUM_N)


def load_mad_thresholds() -> MadThresholds:
    """
    Load Benford MAD verdict thresholds from environment variables.

    Environment variables:
    - ENTROPY_MODES_MAD_CLOSE: upper MAD bound for "close"
    - ENTROPY_MODES_MAD_ACCEPTABLE: upper MAD bound for "acceptable"
    """
    return MadThresholds(close=MAD_CLOSE, acceptable=MAD_ACCEPTABLE)


def default_seed() -> Optional[int]:
    """Seed fallback for the simulator, or None when ENTROPY_MODES_SEED is unset."""
    if ENTROPY_MODES_SEED is None or ENTROPY_MODES_SEED.strip() == "":
        return None
    return int(ENTROPY_MODES_SEED)
