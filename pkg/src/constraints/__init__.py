"""Constraint engine: handler registry, diagnostics and validators."""

from src.constraints.diagnostics import (
    ByteStreamSink,
    CaptureSink,
    DiagnosticSink,
    StderrSink,
    get_diagnostic_sink,
    render_message,
    set_diagnostic_sink,
)
from src.constraints.handlers import (
    DEFAULT,
    DEFAULT_ABORT_STATUS,
    Handler,
    abort_handler,
    clear_last_error,
    get_abort_status,
    get_constraint_handler,
    get_last_error,
    ignore_handler,
    resolve_handler,
    set_abort_status,
    set_constraint_handler,
)
from src.constraints.validator import (
    record_outcome,
    report_format_violation,
    report_token_end_not_found,
    report_violation,
    validate_no_overlap,
    validate_not_null,
    validate_not_zero,
    validate_rsize_limit,
    validate_value_in_range,
)

__all__ = [
    "abort_handler",
    "ByteStreamSink",
    "CaptureSink",
    "clear_last_error",
    "DEFAULT",
    "DEFAULT_ABORT_STATUS",
    "DiagnosticSink",
    "get_abort_status",
    "get_constraint_handler",
    "get_diagnostic_sink",
    "get_last_error",
    "Handler",
    "ignore_handler",
    "record_outcome",
    "render_message",
    "report_format_violation",
    "report_token_end_not_found",
    "report_violation",
    "resolve_handler",
    "set_abort_status",
    "set_constraint_handler",
    "set_diagnostic_sink",
    "StderrSink",
    "validate_no_overlap",
    "validate_not_null",
    "validate_not_zero",
    "validate_rsize_limit",
    "validate_value_in_range",
]
