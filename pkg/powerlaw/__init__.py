"""
Log-log occupancy curve: slope -1 power law, exponential truncation and the -2 field slope.
"""

from .curve import (
    field_transform,
    fit_slope,
    local_slope,
    log_occupancy,
    loglog_curve,
    occupancy_balance,
)
from .models import Abscissa, LogLogSample, OccupancyBalance, SlopeEstimate

__all__ = [
    "field_transform", "fit_slope", "local_slope", "log_occupancy", "loglog_curve",
    "occupancy_balance",
    "Abscissa", "LogLogSample", "OccupancyBalance", "SlopeEstimate",
]
