"""Pytest configuration and shared fixtures.

Every test starts with a clean engine: abort handler, default abort status,
diagnostics captured in memory, fresh metrics and an empty last-error slot.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from prometheus_client import CollectorRegistry

from src.constraints.diagnostics import CaptureSink, set_diagnostic_sink
from src.constraints.handlers import (
    DEFAULT,
    DEFAULT_ABORT_STATUS,
    clear_last_error,
    ignore_handler,
    set_abort_status,
    set_constraint_handler,
)
from src.infrastructure.metrics import init_metrics

GOLDEN_DIR = Path(__file__).parent / "golden"


class CountingHandler:
    """Records every invocation; writes nothing and never terminates."""

    __name__ = "counting"

    def __init__(self):
        self.calls = []

    def __call__(self, message, violation, code):
        self.calls.append((message, violation, code))

    @property
    def count(self) -> int:
        return len(self.calls)

    @property
    def messages(self) -> list[str]:
        return [message for message, _, _ in self.calls]

    @property
    def codes(self) -> list[int]:
        return [code for _, _, code in self.calls]


@pytest.fixture(autouse=True)
def clean_engine():
    """Restore the process-global engine state around every test."""
    sink = CaptureSink()
    previous_sink = set_diagnostic_sink(sink)
    previous_handler = set_constraint_handler(DEFAULT)
    set_abort_status(DEFAULT_ABORT_STATUS)
    init_metrics(CollectorRegistry())
    clear_last_error()
    yield sink
    set_constraint_handler(previous_handler)
    set_diagnostic_sink(previous_sink)
    set_abort_status(DEFAULT_ABORT_STATUS)
    clear_last_error()


@pytest.fixture
def diagnostics(clean_engine) -> CaptureSink:
    """Diagnostic lines written during the test."""
    return clean_engine


@pytest.fixture
def ignoring(diagnostics) -> CaptureSink:
    """Install the ignore handler; yields the captured diagnostics."""
    set_constraint_handler(ignore_handler)
    return diagnostics


@pytest.fixture
def counting() -> CountingHandler:
    """Install a counting handler."""
    handler = CountingHandler()
    set_constraint_handler(handler)
    return handler


def load_golden(name: str) -> bytes:
    """Golden transcript body: header lines starting with '#' are annotations."""
    lines = (GOLDEN_DIR / name).read_bytes().splitlines(keepends=True)
    return b"".join(line for line in lines if not line.startswith(b"#"))
