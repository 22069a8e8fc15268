"""
Leading digits of simulated occupancies.

Exploratory bridge between the exchange chain and the first-digit tests: the
chain does not build digit-modes, so conformance is reported, never asserted.
"""

from typing import Union

from benford.digits import digit_histogram, first_digit
from benford.distribution import check_base
from benford.models import DigitHistogram
from modes.errors import DomainError
from simulation.models import OccupancySummary, SimState


def benford_of_occupancies(source: Union[SimState, OccupancySummary], base: int = 10) -> DigitHistogram:
    """
    Leading-digit histogram of the nonzero occupancies of a state, or of every
    sampled occupancy of a summary (each value weighted by its histogram count).

    Empty modes have no significant digit and are counted as skipped.

    Raises:
        DomainError: if every occupancy is zero
    """
    check_base(base)
    if isinstance(source, SimState):
        nonzero = [n for n in source.occupancies if n > 0]
        if not nonzero:
            raise DomainError("every occupancy is zero; no leading digits")
        return digit_histogram(nonzero, base, skipped=len(source.occupancies) - len(nonzero))

    counts = source.histogram
    if not any(counts[1:]):
        raise DomainError("every sampled occupancy is zero; no leading digits")
    weighted = [0] * (base - 1)
    for value, count in enumerate(counts):
        if value > 0 and count > 0:
            weighted[first_digit(value, base) - 1] += count
    return DigitHistogram(base=base, counts=weighted, skipped=counts[0])
