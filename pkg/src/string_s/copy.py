"""
Bounds-checked string copy and concatenation: strcpy_s, strncpy_s, strcat_s, strncat_s.

Every function validates in the fixed order null, rsize, zero, range,
overlap. On any violation with a usable destination, ``s1[0]`` is set to the
terminator so the caller never sees a half-written string.
"""

from typing import Optional

from src.constraints.validator import (
    record_outcome,
    validate_no_overlap,
    validate_not_null,
    validate_not_zero,
    validate_rsize_limit,
)
from src.core.errors import EOK, ErrorCode
from src.core.memory import ByteBuffer, CString, bounded_strlen, read_bytes, region_of
from src.core.sizes import as_size
from src.string_s.common import check_capacity, check_shorter_than, terminate_on_failure


def _finish(function: str, s1: Optional[ByteBuffer], s1max: int, code: ErrorCode) -> ErrorCode:
    if code:
        terminate_on_failure(s1, s1max)
    return record_outcome(function, code)


def strcpy_s(s1: Optional[ByteBuffer], s1max: int, s2: Optional[CString]) -> ErrorCode:
    """Copy the string ``s2`` (with its terminator) into ``s1``.

    Args:
        s1: Destination buffer
        s1max: Declared destination capacity
        s2: Source string

    Returns:
        0 on success, otherwise the violated kind's code
    """
    fn = "strcpy_s"
    s1max = as_size(s1max)
    code = (
        validate_not_null(fn, "s1", s1 is not None)
        or validate_not_null(fn, "s2", s2 is not None)
        or validate_rsize_limit(fn, "s1max", s1max)
        or validate_not_zero(fn, "s1max", s1max)
        or check_capacity(fn, "s1max", s1max, s1)
    )
    if not code:
        length = bounded_strlen(s2, s1max)
        code = check_shorter_than(fn, "s2", length, s1max) or validate_no_overlap(
            fn, ("s1", "s2"), s1.region(s1max), region_of(s2, length + 1)
        )
    if not code:
        s1.write(0, read_bytes(s2, 0, length) + b"\0")
    return _finish(fn, s1, s1max, code)


def strncpy_s(s1: Optional[ByteBuffer], s1max: int, s2: Optional[CString], n: int) -> ErrorCode:
    """Copy at most ``n`` bytes of ``s2`` into ``s1`` and terminate.

    Fails with kind 2 when ``n >= s1max`` and ``s2`` has no terminator within
    its first ``s1max`` bytes.
    """
    fn = "strncpy_s"
    s1max, n = as_size(s1max), as_size(n)
    code = (
        validate_not_null(fn, "s1", s1 is not None)
        or validate_not_null(fn, "s2", s2 is not None)
        or validate_rsize_limit(fn, "s1max", s1max)
        or validate_rsize_limit(fn, "n", n)
        or validate_not_zero(fn, "s1max", s1max)
        or check_capacity(fn, "s1max", s1max, s1)
    )
    if not code:
        length = bounded_strlen(s2, min(n, s1max))
        if n >= s1max:
            code = check_shorter_than(fn, "s2", length, s1max)
        code = code or validate_no_overlap(fn, ("s1", "s2"), s1.region(s1max), region_of(s2, n))
    if not code:
        s1.write(0, read_bytes(s2, 0, length) + b"\0")
    return _finish(fn, s1, s1max, code)


def _append_room(fn: str, s1: ByteBuffer, s1max: int) -> tuple[ErrorCode, int, int]:
    """Current length of ``s1`` and the room left after it (kind 7 if unterminated)."""
    used = bounded_strlen(s1, s1max)
    room = s1max - used
    return validate_not_zero(fn, "s1", room), used, room


def strcat_s(s1: Optional[ByteBuffer], s1max: int, s2: Optional[CString]) -> ErrorCode:
    """Append ``s2`` to the string in ``s1``."""
    fn = "strcat_s"
    s1max = as_size(s1max)
    code = (
        validate_not_null(fn, "s1", s1 is not None)
        or validate_not_null(fn, "s2", s2 is not None)
        or validate_rsize_limit(fn, "s1max", s1max)
        or validate_not_zero(fn, "s1max", s1max)
        or check_capacity(fn, "s1max", s1max, s1)
    )
    if not code:
        code, used, room = _append_room(fn, s1, s1max)
    if not code:
        length = bounded_strlen(s2, room)
        code = check_shorter_than(fn, "s2", length, room) or validate_no_overlap(
            fn, ("s1", "s2"), s1.region(s1max), region_of(s2, length + 1)
        )
    if not code:
        s1.write(used, read_bytes(s2, 0, length) + b"\0")
    return _finish(fn, s1, s1max, code)


def strncat_s(s1: Optional[ByteBuffer], s1max: int, s2: Optional[CString], n: int) -> ErrorCode:
    """Append at most ``n`` bytes of ``s2`` to the string in ``s1``."""
    fn = "strncat_s"
    s1max, n = as_size(s1max), as_size(n)
    code = (
        validate_not_null(fn, "s1", s1 is not None)
        or validate_not_null(fn, "s2", s2 is not None)
        or validate_rsize_limit(fn, "s1max", s1max)
        or validate_rsize_limit(fn, "n", n)
        or validate_not_zero(fn, "s1max", s1max)
        or check_capacity(fn, "s1max", s1max, s1)
    )
    if not code:
        code, used, room = _append_room(fn, s1, s1max)
    if not code:
        length = bounded_strlen(s2, min(n, room))
        if n >= room:
            code = check_shorter_than(fn, "s2", length, room)
        code = code or validate_no_overlap(fn, ("s1", "s2"), s1.region(s1max), region_of(s2, n))
    if not code:
        s1.write(used, read_bytes(s2, 0, length) + b"\0")
    return _finish(fn, s1, s1max, code)
