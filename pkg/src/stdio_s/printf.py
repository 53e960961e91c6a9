"""
The printf_s family.

Before anything is written, the format must be present, parse, contain no
%n, and give every %s a present string. A violating call writes no payload
and returns the negated kind code.
"""

from typing import Optional, Sequence, Union

from src.constraints.validator import (
    report_format_violation,
    validate_not_null,
    validate_not_zero,
    validate_rsize_limit,
)
from src.core.errors import EOK, ErrorCode, ErrorKind
from src.core.memory import ByteBuffer
from src.core.sizes import as_size
from src.formatting.args import ArgValue, as_args
from src.formatting.directives import FormatError
from src.formatting.render import render
from src.formatting.validation import MALFORMED, check_output_format
from src.infrastructure.logging_config import get_logger
from src.stdio_s.streams import ByteSink, stdout_sink
from src.string_s.common import check_capacity, check_shorter_than, terminate_on_failure

logger = get_logger(__name__)

FormatArg = Union[bytes, str, None]


def _as_format(fmt: FormatArg) -> Optional[bytes]:
    if isinstance(fmt, str):
        return fmt.encode("latin-1")
    return fmt


def _checked_render(function: str, fmt: Optional[bytes], args: Sequence[ArgValue]) -> tuple[ErrorCode, bytes]:
    code, items = check_output_format(function, fmt, args)
    if code:
        return code, b""
    try:
        return EOK, render(items, args)
    except FormatError as exc:
        logger.debug(f"{function}: {exc}")
        return report_format_violation(function, ErrorKind.INVALID_FORMAT_PARAMETER_N, MALFORMED), b""


def format_write(function: str, sink: ByteSink, fmt: FormatArg, args: Sequence[ArgValue]) -> int:
    """Validate, render and write to ``sink``.

    Returns:
        Bytes written, or the negated kind code on a violation
    """
    code, out = _checked_render(function, _as_format(fmt), args)
    if code:
        return -code
    return sink.write(out)


def printf_s(fmt: FormatArg, *args: object) -> int:
    return format_write("printf_s", stdout_sink(), fmt, as_args(args))


def fprintf_s(stream: ByteSink, fmt: FormatArg, *args: object) -> int:
    return format_write("fprintf_s", stream, fmt, as_args(args))


def vprintf_s(fmt: FormatArg, args: Sequence[ArgValue]) -> int:
    return format_write("vprintf_s", stdout_sink(), fmt, args)


def vfprintf_s(stream: ByteSink, fmt: FormatArg, args: Sequence[ArgValue]) -> int:
    return format_write("vfprintf_s", stream, fmt, args)


def format_render_bounded(
    function: str,
    s: Optional[ByteBuffer],
    n: int,
    fmt: FormatArg,
    args: Sequence[ArgValue],
    truncating: bool,
) -> int:
    """Render into ``s`` with at most ``n`` bytes including the terminator.

    With ``truncating`` (snprintf_s) the output is cut to ``n - 1`` bytes and
    the untruncated length is returned. Without it (sprintf_s) output that
    does not fit is a kind 2 violation.
    """
    n = as_size(n)
    fmt = _as_format(fmt)
    code = (
        validate_not_null(function, "s", s is not None)
        or validate_not_null(function, "format", fmt is not None)
        or validate_rsize_limit(function, "n", n)
        or validate_not_zero(function, "n", n)
        or check_capacity(function, "n", n, s)
    )
    if not code:
        code, out = _checked_render(function, fmt, args)
    if not code and not truncating:
        code = check_shorter_than(function, "s", len(out), n)
    if code:
        terminate_on_failure(s, n)
        return -code

    s.write(0, out[: n - 1] + b"\0")
    return len(out)


def snprintf_s(s: Optional[ByteBuffer], n: int, fmt: FormatArg, *args: object) -> int:
    return format_render_bounded("snprintf_s", s, n, fmt, as_args(args), truncating=True)


def sprintf_s(s: Optional[ByteBuffer], n: int, fmt: FormatArg, *args: object) -> int:
    return format_render_bounded("sprintf_s", s, n, fmt, as_args(args), truncating=False)


def vsnprintf_s(s: Optional[ByteBuffer], n: int, fmt: FormatArg, args: Sequence[ArgValue]) -> int:
    return format_render_bounded("vsnprintf_s", s, n, fmt, args, truncating=True)


def vsprintf_s(s: Optional[ByteBuffer], n: int, fmt: FormatArg, args: Sequence[ArgValue]) -> int:
    return format_render_bounded("vsprintf_s", s, n, fmt, args, truncating=False)
