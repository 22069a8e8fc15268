"""Exceptions shared by every entropy-modes package."""


class EntropyModesError(Exception):
    """Base class for all library errors."""
    pass


class DomainError(EntropyModesError, ValueError):
    """Raised when an input lies outside the mathematical domain of an operation."""
    pass


class RegimeError(DomainError):
    """Raised when a limit formula is requested outside the regime it describes."""
    pass


class ParseError(EntropyModesError, ValueError):
    """Raised for malformed input data (bitstreams, numeric datasets, CSV columns)."""
    pass


class ConservationError(EntropyModesError):
    """Raised when a simulation step fails to conserve the number of quanta."""
    pass


class OutputError(EntropyModesError):
    """Raised when a report or TSV file cannot be written."""
    pass
