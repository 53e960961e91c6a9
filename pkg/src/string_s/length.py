"""strnlen_s and the error-message functions strerror_s / strerrorlen_s."""

from typing import Optional

from src.constraints.validator import (
    record_outcome,
    validate_not_null,
    validate_not_zero,
    validate_rsize_limit,
)
from src.core.errors import EOK, ErrorCode, ErrorKind, error_text
from src.core.memory import ByteBuffer, CString, bounded_strlen
from src.core.sizes import as_size
from src.string_s.common import check_capacity, terminate_on_failure

_ELLIPSIS = b"..."


def strnlen_s(s: Optional[CString], maxsize: int) -> int:
    """Length of ``s`` capped at ``maxsize``; 0 for a null pointer."""
    return bounded_strlen(s, as_size(maxsize))


def strerrorlen_s(errnum: int) -> int:
    """Untruncated length of the message strerror_s would produce."""
    return len(error_text(errnum))


def strerror_s(s: Optional[ByteBuffer], maxsize: int, errnum: int) -> ErrorCode:
    """Copy the message for ``errnum`` into ``s``.

    A message that does not fit is truncated with a trailing "..." and the
    call returns kind 2 without invoking the constraint handler.
    """
    fn = "strerror_s"
    maxsize = as_size(maxsize)
    code = (
        validate_not_null(fn, "s", s is not None)
        or validate_rsize_limit(fn, "maxsize", maxsize)
        or validate_not_zero(fn, "maxsize", maxsize)
        or check_capacity(fn, "maxsize", maxsize, s)
    )
    if code:
        terminate_on_failure(s, maxsize)
        return code

    message = error_text(errnum).encode("latin-1")
    if len(message) < maxsize:
        s.write(0, message + b"\0")
        return record_outcome(fn, EOK)

    if maxsize > len(_ELLIPSIS):
        s.write(0, message[: maxsize - 4] + _ELLIPSIS + b"\0")
    else:
        s.write(0, message[: maxsize - 1] + b"\0")
    return record_outcome(fn, int(ErrorKind.PARAMETER_OUT_OF_RANGE), errnum=errnum, truncated=True)
