"""Bounds-checked raw memory copies: memcpy_s and memmove_s.

On a violation with a usable destination the first ``s1max`` bytes are
zero-filled.
"""

from typing import Optional

from src.constraints.validator import (
    record_outcome,
    validate_no_overlap,
    validate_not_null,
    validate_rsize_limit,
    validate_value_in_range,
)
from src.core.errors import ErrorCode
from src.core.memory import ByteBuffer, CString, read_bytes, readable_length, region_of
from src.core.sizes import as_size
from src.core.types import ValueRange
from src.string_s.common import check_capacity, zero_on_failure


def _common_checks(fn: str, s1: Optional[ByteBuffer], s1max: int, s2: Optional[CString], n: int) -> ErrorCode:
    return (
        validate_not_null(fn, "s1", s1 is not None)
        or validate_not_null(fn, "s2", s2 is not None)
        or validate_rsize_limit(fn, "s1max", s1max)
        or validate_rsize_limit(fn, "n", n)
        or check_capacity(fn, "s1max", s1max, s1)
        or validate_value_in_range(fn, "n", n, ValueRange(0, s1max))
        or validate_value_in_range(fn, "n", n, ValueRange(0, readable_length(s2)))
    )


def memcpy_s(s1: Optional[ByteBuffer], s1max: int, s2: Optional[CString], n: int) -> ErrorCode:
    """Copy ``n`` bytes from ``s2`` to ``s1``; the two regions must not overlap."""
    fn = "memcpy_s"
    s1max, n = as_size(s1max), as_size(n)
    code = _common_checks(fn, s1, s1max, s2, n) or validate_no_overlap(
        fn, ("s1", "s2"), s1.region(n), region_of(s2, n)
    )
    if code:
        zero_on_failure(s1, s1max)
    else:
        s1.write(0, read_bytes(s2, 0, n))
    return record_outcome(fn, code)


def memmove_s(s1: Optional[ByteBuffer], s1max: int, s2: Optional[CString], n: int) -> ErrorCode:
    """Copy ``n`` bytes from ``s2`` to ``s1`` as if through a temporary buffer."""
    fn = "memmove_s"
    s1max, n = as_size(s1max), as_size(n)
    code = _common_checks(fn, s1, s1max, s2, n)
    if code:
        zero_on_failure(s1, s1max)
    else:
        # read_bytes returns a copy, so overlapping views are safe
        s1.write(0, read_bytes(s2, 0, n))
    return record_outcome(fn, code)
