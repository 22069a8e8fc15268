"""
Dataset ingestion for the CLI.

Inputs are read as raw bytes first so the report can hash exactly what was
consumed; "-" reads standard input.
"""

import io
import logging
import sys
from pathlib import Path
from typing import List, Tuple

import pandas as pd

from modes.errors import ParseError

logger = logging.getLogger(__name__)

STDIN = "-"


def read_input_bytes(path: str) -> bytes:
    """Read a file (or stdin for "-") as bytes."""
    if path == STDIN:
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror or e}")


def decode_text(data: bytes, source: str) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        raise ParseError(f"{source} is not UTF-8 text (use --raw for binary files)")


def number_lines(data: bytes, source: str) -> List[str]:
    """Non-blank lines of a newline-delimited number file."""
    return [line.strip() for line in decode_text(data, source).splitlines() if line.strip()]


def csv_column(data: bytes, column: str, header: bool = True, source: str = "csv") -> Tuple[List[str], int]:
    """
    Extract one CSV column as text cells.

    `column` is a header name, or a 0-based index. Names need a header row.

    Returns:
        (non-empty cells, count of empty cells)

    Raises:
        ParseError: if the CSV cannot be parsed or the column does not exist
    """
    try:
        df = pd.read_csv(
            io.BytesIO(data),
            header=0 if header else None,
            dtype=str,
            keep_default_na=False,
        )
    except (pd.errors.EmptyDataError, pd.errors.ParserError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot parse {source} as CSV: {e}")

    if header and column in df.columns:
        series = df[column]
    elif column.isdigit():
        index = int(column)
        if index >= len(df.columns):
            raise ParseError(f"{source} has {len(df.columns)} columns, no column {index}")
        series = df.iloc[:, index]
    elif not header:
        raise ParseError("a column name needs a header row (drop --no-header or give an index)")
    else:
        raise ParseError(f"no column named {column!r} in {source}")

    cells = [cell.strip() for cell in series.tolist()]
    values = [cell for cell in cells if cell]
    empty = len(cells) - len(values)
    logger.info(f"read {len(cells)} cells from column {column!r} of {source} ({empty} empty)")
    return values, empty
