"""
Runtime-constraint validators.

Each validator returns 0 when its predicate holds and otherwise reports one
violation through ``report_violation`` and returns the kind's code. Callers
chain them with ``or`` so the first failure wins::

    code = (validate_not_null(fn, "s1", s1 is not None)
            or validate_rsize_limit(fn, "s1max", s1max))
"""

from typing import Optional, Union

from src.constraints.diagnostics import render_message
from src.constraints.handlers import get_constraint_handler, handler_name, set_last_error
from src.core.errors import EOK, ErrorCode, ErrorKind
from src.core.sizes import RSIZE_MAX, as_size
from src.core.types import MemRegion, ValueRange, Violation, regions_overlap
from src.infrastructure.logging_config import get_logging_manager
from src.infrastructure.metrics import get_metrics


def report_violation(violation: Violation) -> ErrorCode:
    """Route a violation to the current handler and return its code.

    The violation is logged and counted first, and the per-thread last error
    is set, so an aborting handler still leaves a trace.
    """
    if not violation.error_present:
        raise ValueError("NOERROR is never reported")
    code = violation.code
    handler = get_constraint_handler()
    get_logging_manager().log_violation(violation, code)
    get_metrics().record_violation(violation, handler_name(handler))
    set_last_error(code)
    handler(render_message(violation), violation, code)
    return code


def record_outcome(function: str, code: ErrorCode, **details) -> ErrorCode:
    """Record a non-zero return that is not a runtime-constraint violation.

    Used for outcomes like getenv_s "not found": the handler is not invoked.
    """
    if code != EOK:
        set_last_error(code)
    get_logging_manager().log_operation(function, code, details or None)
    return code


def _report(kind: ErrorKind, function: str, param: str, **kwargs) -> ErrorCode:
    return report_violation(Violation(kind, function, param, **kwargs))


def validate_not_null(function: str, param: str, present: bool) -> ErrorCode:
    if present:
        return EOK
    return _report(ErrorKind.NULL_PARAMETER_NOT_ALLOWED, function, param)


def validate_value_in_range(function: str, param: str, value: int, value_range: ValueRange) -> ErrorCode:
    """Inclusive range check on the size_t value of ``value``."""
    size = as_size(value)
    if size in value_range:
        return EOK
    return _report(ErrorKind.PARAMETER_OUT_OF_RANGE, function, param, detail=str(size))


def validate_not_zero(function: str, param: str, value: int) -> ErrorCode:
    if as_size(value) != 0:
        return EOK
    return _report(ErrorKind.NOT_ZERO, function, param)


def validate_rsize_limit(function: str, param: str, value: int) -> ErrorCode:
    size = as_size(value)
    if size <= RSIZE_MAX:
        return EOK
    return _report(ErrorKind.RSIZE_MAX_EXCEEDED, function, param, detail=str(size))


def validate_no_overlap(
    function: str,
    param_pair: Union[str, tuple[str, str]],
    a: Optional[MemRegion],
    b: Optional[MemRegion],
) -> ErrorCode:
    """Report kind 8 when the two regions share an address.

    A missing region (immutable source outside the modelled address space)
    never overlaps.
    """
    if a is None or b is None or not regions_overlap(a, b):
        return EOK
    if isinstance(param_pair, str):
        first, _, second = param_pair.partition(" and ")
    else:
        first, second = param_pair
    return _report(ErrorKind.OBJECTS_OVERLAP, function, first, pair_param_name=second or None)


def report_token_end_not_found(function: str, param: str) -> ErrorCode:
    return _report(ErrorKind.TOKEN_END_NOT_FOUND, function, param)


def report_format_violation(function: str, kind: ErrorKind, detail: str) -> ErrorCode:
    """Report a kind 4 or kind 5 violation; ``detail`` goes inside the parentheses."""
    if not ErrorKind(kind).is_format_violation:
        raise ValueError(f"{kind!r} is not a format violation")
    return _report(kind, function, "format", detail=detail)
