"""
Structured command reports.

Every subcommand returns a Report: tool version, the parameter echo, a
content hash of its input, the results object, RNG metadata for seeded
commands and any regime warnings raised while computing. Reports carry no
timestamps, so rerunning a command reproduces its report byte for byte.
"""

import hashlib
import json
import logging
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional

from pydantic import BaseModel, Field

from config import VERSION

WATCHED_LOGGERS = ("modes", "information", "benford", "powerlaw", "simulation", "carnot", "cli")


class Report(BaseModel):
    """Machine-readable output of one subcommand."""

    command: str = Field(..., description="Subcommand name")
    version: str = Field(VERSION, description="Tool version")
    params: Dict[str, Any] = Field(default_factory=dict, description="Echo of every parameter")
    input_digest: str = Field(..., description="sha256 of the input bytes, or of the parameters when there is no input")
    results: Dict[str, Any] = Field(default_factory=dict)
    rng: Optional[Dict[str, Any]] = Field(None, description="Generator algorithm, version and seed")
    warnings: List[str] = Field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"


def digest_bytes(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def digest_params(params: Dict[str, Any]) -> str:
    """Digest of the canonical JSON of the parameters, for commands without an input file."""
    canonical = json.dumps(params, sort_keys=True, separators=(",", ":"), default=str)
    return digest_bytes(canonical.encode("utf-8"))


class _WarningCollector(logging.Handler):
    def __init__(self, sink: List[str]):
        super().__init__(level=logging.WARNING)
        self.sink = sink

    def emit(self, record: logging.LogRecord) -> None:
        message = record.getMessage()
        if message not in self.sink:
            self.sink.append(message)


@contextmanager
def collect_warnings() -> Iterator[List[str]]:
    """Collect WARNING records of the library packages while the block runs."""
    sink: List[str] = []
    handler = _WarningCollector(sink)
    loggers = [logging.getLogger(name) for name in WATCHED_LOGGERS]
    for logger in loggers:
        logger.addHandler(handler)
    try:
        yield sink
    finally:
        for logger in loggers:
            logger.removeHandler(handler)
