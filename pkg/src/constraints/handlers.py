"""
Constraint handler registry and the two built-in handlers.

The registry is process-global; replacing the handler is atomic and returns
the previous one, like ``set_constraint_handler_s``. The last-error slot is
per thread.
"""

import logging
import os
import sys
import threading
from typing import Callable, Optional, TypeAlias, Union

from src.constraints.diagnostics import get_diagnostic_sink
from src.core.errors import EOK, ErrorCode
from src.core.types import Violation

# (message, violation, code): the role of constraint_handler_t
Handler: TypeAlias = Callable[[str, Violation, ErrorCode], None]

DEFAULT_ABORT_STATUS = 134


class _DefaultHandler:
    """Sentinel accepted by set_constraint_handler: restores the abort handler."""

    def __repr__(self) -> str:
        return "DEFAULT"


DEFAULT = _DefaultHandler()

_abort_status = DEFAULT_ABORT_STATUS


def set_abort_status(status: int) -> int:
    """Set the exit status used by abort_handler; returns the previous one."""
    global _abort_status
    if not 1 <= status <= 255:
        raise ValueError(f"abort status must be in 1..255, got {status}")
    previous, _abort_status = _abort_status, status
    return previous


def get_abort_status() -> int:
    return _abort_status


def abort_handler(message: str, violation: Violation, code: ErrorCode) -> None:
    """Write the diagnostic line, then terminate the process with the configured status.

    On the main thread this raises ``SystemExit``. SystemExit in a worker thread
    only ends that thread, so there the process is ended with ``os._exit``
    after flushing the standard streams and logging.
    """
    sink = get_diagnostic_sink()
    sink.write_line(message)
    sink.flush()
    if threading.current_thread() is threading.main_thread():
        raise SystemExit(_abort_status)
    for stream in (sys.stdout, sys.stderr):
        stream.flush()
    logging.shutdown()
    os._exit(_abort_status)


def ignore_handler(message: str, violation: Violation, code: ErrorCode) -> None:
    """Write the diagnostic line and let the failing call return its code."""
    get_diagnostic_sink().write_line(message)


_registry_lock = threading.Lock()
_handler: Handler = abort_handler


def set_constraint_handler(handler: Union[Handler, _DefaultHandler, None]) -> Handler:
    """Atomically replace the process-global handler.

    Args:
        handler: New handler, or DEFAULT / None to restore abort_handler

    Returns:
        The previously registered handler
    """
    global _handler
    new = abort_handler if handler is None or handler is DEFAULT else handler
    if not callable(new):
        raise TypeError(f"constraint handler must be callable, got {type(new).__name__}")
    with _registry_lock:
        previous, _handler = _handler, new
    return previous


def get_constraint_handler() -> Handler:
    with _registry_lock:
        return _handler


def handler_name(handler: Handler) -> str:
    """Label used in metrics and logs."""
    if handler is abort_handler:
        return "abort"
    if handler is ignore_handler:
        return "ignore"
    return getattr(handler, "__name__", type(handler).__name__)


_last = threading.local()


def get_last_error() -> ErrorCode:
    """Code of the most recent failing operation on this thread (0 if none)."""
    return getattr(_last, "code", EOK)


def set_last_error(code: ErrorCode) -> None:
    _last.code = code


def clear_last_error() -> None:
    _last.code = EOK


def resolve_handler(name: Optional[str]) -> Handler:
    """Map a configured handler name to a built-in handler."""
    if name in (None, "abort"):
        return abort_handler
    if name == "ignore":
        return ignore_handler
    raise ValueError(f"unknown constraint handler: {name!r}")
