"""Checks and damage-control helpers shared by the string and memory functions."""

from typing import Optional

from src.constraints.validator import validate_value_in_range
from src.core.errors import EOK, ErrorCode
from src.core.memory import ByteBuffer
from src.core.sizes import RSIZE_MAX
from src.core.types import ValueRange


def check_capacity(function: str, param: str, declared: int, buffer: ByteBuffer) -> ErrorCode:
    """A declared capacity may not exceed the bytes physically behind the pointer."""
    return validate_value_in_range(function, param, declared, ValueRange(0, buffer.capacity))


def check_shorter_than(function: str, param: str, length: int, limit: int) -> ErrorCode:
    """``length`` bytes plus a terminator must fit in ``limit`` bytes."""
    if length < limit:
        return EOK
    return validate_value_in_range(function, param, length, ValueRange(0, max(limit - 1, 0)))


def usable_size(s1: Optional[ByteBuffer], s1max: int) -> int:
    """Bytes damage control may touch: 0 unless both pointer and size are valid."""
    if s1 is None or s1max == 0 or s1max > RSIZE_MAX:
        return 0
    return min(s1max, s1.capacity)


def terminate_on_failure(s1: Optional[ByteBuffer], s1max: int) -> None:
    if usable_size(s1, s1max):
        s1[0] = 0


def zero_on_failure(s1: Optional[ByteBuffer], s1max: int) -> None:
    size = usable_size(s1, s1max)
    if size:
        s1.fill(0, size)
