"""
Bitstream parsing.

Two input encodings are supported:
- ASCII text of '0'/'1' characters, whitespace ignored
- raw bytes, unpacked MSB-first into 8 bits each
"""

import logging
from typing import Iterable, Union

import numpy as np

from information.models import BitFileStats
from modes.errors import DomainError, ParseError

logger = logging.getLogger(__name__)

_WHITESPACE = set(" \t\r\n\f\v")


def parse_bit_text(text: str) -> np.ndarray:
    """
    Convert '0'/'1' text into a uint8 array, skipping whitespace.

    Raises:
        ParseError: on any other character
    """
    bits = []
    for position, char in enumerate(text):
        if char == "0" or char == "1":
            bits.append(char == "1")
        elif char not in _WHITESPACE:
            raise ParseError(f"non-binary symbol {char!r} at offset {position}")
    return np.asarray(bits, dtype=np.uint8)


def unpack_bytes(data: bytes) -> np.ndarray:
    """Unpack raw bytes MSB-first."""
    return np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="big")


def bit_stats(stream: Union[str, bytes, Iterable[int]], raw: bool = False) -> BitFileStats:
    """
    Count Λ and L of a binary sequence.

    Args:
        stream: '0'/'1' text, raw bytes (with raw=True) or an iterable of 0/1 symbols
        raw: unpack bytes MSB-first instead of reading them as ASCII

    Raises:
        DomainError: on an empty sequence
        ParseError: on a non-binary symbol
    """
    if isinstance(stream, (bytes, bytearray)):
        bits = unpack_bytes(bytes(stream)) if raw else parse_bit_text(stream.decode("ascii", "replace"))
    elif isinstance(stream, str):
        bits = parse_bit_text(stream)
    else:
        bits = np.asarray(list(stream))
        if bits.size and not np.all((bits == 0) | (bits == 1)):
            raise ParseError("bit sequence may only contain 0 and 1")

    if bits.size == 0:
        raise DomainError("empty bitstream")

    length = int(bits.size)
    ones = int(np.count_nonzero(bits))
    logger.debug(f"bitstream: {length} bits, {ones} ones")
    return BitFileStats(length=length, ones=ones)
