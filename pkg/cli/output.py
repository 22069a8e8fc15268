"""
TSV writers for plot-ready data.

Tab separated, '\\n' line endings, no header row. Probabilities use fixed
6-decimal notation; unbounded magnitudes use scientific notation. Python
formatting never consults the locale, so the decimal point is always '.'.
"""

import logging
import sys
from pathlib import Path
from typing import Iterable, Sequence

from benford.models import DigitDistribution
from modes.errors import OutputError
from powerlaw.models import LogLogSample

logger = logging.getLogger(__name__)

STDOUT = "-"


def format_probability(p: float) -> str:
    return f"{p:.6f}"


def format_magnitude(x: float) -> str:
    return f"{x:.9e}"


def tsv_lines(rows: Iterable[Sequence[str]]) -> str:
    return "".join("\t".join(row) + "\n" for row in rows)


def pmf_rows(dist: DigitDistribution):
    for digit, p in enumerate(dist.probs, start=1):
        yield str(digit), format_probability(p)


def loglog_rows(samples: Sequence[LogLogSample]):
    for sample in samples:
        yield format_magnitude(sample.ln_x), format_magnitude(sample.ln_n)


def trajectory_row(step: int, counts: Sequence[int]) -> str:
    return tsv_lines([[str(step), *(str(c) for c in counts)]])


def write_text(path: str, text: str) -> None:
    """Write to a file, or to stdout for "-"."""
    if path == STDOUT:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(Path(path), "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e.strerror or e}") from e
    logger.info(f"wrote {path}")
