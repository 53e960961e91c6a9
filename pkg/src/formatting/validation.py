"""
Format restrictions enforced by the *_s formatted I/O functions.

- No %n directive may appear (kind 5).
- Every %s argument must be a present string (kind 4).
- A format that does not parse is rejected as kind 5 with detail "malformed".
"""

from typing import Optional, Sequence

from src.constraints.validator import report_format_violation, validate_not_null
from src.core.errors import EOK, ErrorCode, ErrorKind
from src.formatting.args import ArgValue, Str
from src.formatting.directives import (
    PRINTF_CONVERSIONS,
    FormatError,
    FormatItem,
    directives_of,
    parse_directives,
)

MALFORMED = "malformed"
NULL_STRING = "NULL argument for %s"


def _parse_or_report(
    function: str, fmt: bytes, conversions: frozenset[str]
) -> tuple[ErrorCode, list[FormatItem]]:
    try:
        return EOK, parse_directives(fmt, conversions)
    except FormatError:
        return report_format_violation(function, ErrorKind.INVALID_FORMAT_PARAMETER_N, MALFORMED), []


def validate_format_n(function: str, fmt: Optional[bytes]) -> ErrorCode:
    """Reject formats containing a %n directive."""
    code = validate_not_null(function, "format", fmt is not None)
    if code:
        return code
    code, items = _parse_or_report(function, fmt, PRINTF_CONVERSIONS)
    if code:
        return code
    return _check_n(function, items)


def _check_n(function: str, items: list[FormatItem]) -> ErrorCode:
    if any(d.conversion == "n" for d in directives_of(items)):
        return report_format_violation(function, ErrorKind.INVALID_FORMAT_PARAMETER_N, "%n")
    return EOK


def _check_s(function: str, items: list[FormatItem], args: Sequence[ArgValue]) -> ErrorCode:
    index = 0
    for directive in directives_of(items):
        if directive.conversion == "%":
            continue
        index += directive.consumes - 1
        if directive.conversion == "s":
            arg = args[index] if index < len(args) else None
            if not (isinstance(arg, Str) and arg.present):
                return report_format_violation(function, ErrorKind.INVALID_FORMAT_PARAMETER_S, NULL_STRING)
        index += 1
    return EOK


def validate_format_s(function: str, fmt: Optional[bytes], args: Sequence[ArgValue]) -> ErrorCode:
    """Reject %s directives whose argument is absent."""
    code = validate_not_null(function, "format", fmt is not None)
    if code:
        return code
    code, items = _parse_or_report(function, fmt, PRINTF_CONVERSIONS)
    if code:
        return code
    return _check_s(function, items, args)


def check_output_format(
    function: str, fmt: Optional[bytes], args: Sequence[ArgValue]
) -> tuple[ErrorCode, list[FormatItem]]:
    """Full pre-render check for the printf family: null, parse, %n, then %s.

    Returns the first failure code (0 on success) and the parsed items.
    """
    code = validate_not_null(function, "format", fmt is not None)
    if code:
        return code, []
    code, items = _parse_or_report(function, fmt, PRINTF_CONVERSIONS)
    if code:
        return code, []
    code = _check_n(function, items) or _check_s(function, items, args)
    return code, items
