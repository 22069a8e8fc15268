"""
First-significant-digit extraction and digit histograms.

Base 10 goes through decimal string normalization so values such as 0.3 or
1e-5 are classified by their written digits, not by binary floating error.
Other bases use exact rational arithmetic on the value.
"""

import logging
import math
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterable, Optional, Union

from benford.distribution import check_base
from benford.models import DigitHistogram
from modes.errors import DomainError, EntropyModesError, ParseError

logger = logging.getLogger(__name__)

Number = Union[int, float, str, Decimal, Fraction]


def _to_decimal(x: Number) -> Decimal:
    if isinstance(x, Decimal):
        value = x
    elif isinstance(x, bool):
        value = Decimal(int(x))
    elif isinstance(x, int):
        value = Decimal(x)
    elif isinstance(x, float):
        # repr is the shortest string that round-trips to the same float
        value = Decimal(repr(float(x)))
    else:
        try:
            value = Decimal(str(x).strip())
        except InvalidOperation:
            raise ParseError(f"not a number: {x!r}")
    if not value.is_finite():
        raise DomainError(f"non-finite value: {x!r}")
    return value


def _first_digit_base10(value: Decimal) -> Optional[int]:
    if value.is_zero():
        return None
    for digit in value.as_tuple().digits:
        if digit:
            return digit
    return None


def _to_fraction(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            raise DomainError(f"non-finite value: {x!r}")
        return Fraction(x)
    return Fraction(_to_decimal(x))


def _first_digit_exact(value: Fraction, base: int) -> Optional[int]:
    value = abs(value)
    if value == 0:
        return None
    # bit lengths bound log2(value) to within one; refine with exact comparisons
    log2_estimate = value.numerator.bit_length() - value.denominator.bit_length()
    exponent = math.floor(log2_estimate / math.log2(base))
    scale = Fraction(base) ** exponent
    while scale > value:
        exponent -= 1
        scale = Fraction(base) ** exponent
    while scale * base <= value:
        exponent += 1
        scale = Fraction(base) ** exponent
    return math.floor(value / scale)


def first_digit(x: Number, base: int = 10) -> Optional[int]:
    """
    Leading significant digit of |x| in base b, or None for zero.

    Raises:
        DomainError: for non-finite input
        ParseError: for text that is not a number
    """
    check_base(base)
    if base == 10 and not isinstance(x, Fraction):
        return _first_digit_base10(_to_decimal(x))
    return _first_digit_exact(_to_fraction(x), base)


def digit_histogram(values: Iterable[Number], base: int = 10, skipped: int = 0) -> DigitHistogram:
    """
    Count leading digits over a dataset.

    Zeros, non-finite values and unparseable entries are counted in `skipped`
    instead of failing the whole dataset.
    """
    check_base(base)
    counts = [0] * (base - 1)
    for value in values:
        try:
            digit = first_digit(value, base)
        except EntropyModesError as e:
            logger.debug(f"skipping {value!r}: {e}")
            digit = None
        if digit is None:
            skipped += 1
        else:
            counts[digit - 1] += 1
    if skipped:
        logger.warning(f"{skipped} entries had no significant digit and were skipped")
    return DigitHistogram(base=base, counts=counts, skipped=skipped)


def merge_histograms(first: DigitHistogram, second: DigitHistogram) -> DigitHistogram:
    """Add two histograms of the same base; the merge is associative."""
    if first.base != second.base:
        raise DomainError(f"cannot merge base {first.base} with base {second.base}")
    return DigitHistogram(
        base=first.base,
        counts=[a + b for a, b in zip(first.counts, second.counts)],
        skipped=first.skipped + second.skipped,
    )
