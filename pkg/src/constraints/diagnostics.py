"""
Diagnostic rendering and the pluggable diagnostic sink.

Every violation becomes exactly one line of the form::

    <function>(): <message> : <param>

Format violations drop the parameter clause and carry their detail inside
parentheses instead. Lines are written to the current sink, standard error by
default.
"""

import sys
import threading
from typing import Any, Optional, Protocol

from src.core.types import Violation


def render_message(violation: Violation) -> str:
    """Render the diagnostic line for ``violation`` (without the terminator)."""
    if violation.kind.is_format_violation:
        detail = violation.detail or ("%n" if violation.code == 5 else "%s")
        return f"{violation.function_name}(): invalid format parameter ({detail})"
    return f"{violation.function_name}(): {violation.kind.message} : {violation.params}"


class DiagnosticSink(Protocol):
    def write_line(self, line: str) -> None: ...

    def flush(self) -> None: ...


class StderrSink:
    """Writes to whatever ``sys.stderr`` is at call time (pytest's capsys swaps it)."""

    def write_line(self, line: str) -> None:
        sys.stderr.write(line + "\n")

    def flush(self) -> None:
        sys.stderr.flush()


class CaptureSink:
    """Keeps diagnostic lines in memory."""

    def __init__(self):
        self.lines: list[str] = []
        self._lock = threading.Lock()

    def write_line(self, line: str) -> None:
        with self._lock:
            self.lines.append(line)

    def flush(self) -> None:
        pass

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)

    def clear(self) -> None:
        with self._lock:
            self.lines.clear()


class ByteStreamSink:
    """Encodes diagnostic lines onto a byte stream (anything with ``write(bytes)``).

    Used to merge diagnostics into the same transcript as program output.
    """

    def __init__(self, stream: Any, encoding: str = "latin-1"):
        self.stream = stream
        self.encoding = encoding

    def write_line(self, line: str) -> None:
        self.stream.write((line + "\n").encode(self.encoding, errors="replace"))

    def flush(self) -> None:
        flush = getattr(self.stream, "flush", None)
        if flush is not None:
            flush()


_sink_lock = threading.Lock()
_sink: Optional[DiagnosticSink] = None


def get_diagnostic_sink() -> DiagnosticSink:
    global _sink
    with _sink_lock:
        if _sink is None:
            _sink = StderrSink()
        return _sink


def set_diagnostic_sink(sink: Optional[DiagnosticSink]) -> DiagnosticSink:
    """Install ``sink`` (None restores standard error); returns the previous sink."""
    global _sink
    with _sink_lock:
        previous = _sink if _sink is not None else StderrSink()
        _sink = sink
        return previous
