"""Size-type model: size_t width, SIZE_MAX and the RSIZE_MAX overflow guard."""

import ctypes

SIZE_WIDTH: int = ctypes.sizeof(ctypes.c_size_t) * 8

SIZE_MAX: int = (1 << SIZE_WIDTH) - 1

# Half the address space: any negative size converted to size_t lands above it.
RSIZE_MAX: int = (1 << (SIZE_WIDTH - 1)) - 1


def as_size(value: int) -> int:
    """Convert a Python integer to size_t the way C converts it implicitly.

    >>> as_size(-1) == SIZE_MAX
    True
    """
    return value & SIZE_MAX


def within_rsize(value: int) -> bool:
    return as_size(value) <= RSIZE_MAX
