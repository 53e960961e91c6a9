"""Error taxonomy for runtime-constraint violations.

Every safer operation reports failures with one of these kinds. The numeric
value doubles as the operation's ``errno_t``-style return code, so the values
are fixed and must never be renumbered.
"""

from enum import IntEnum
from typing import TypeAlias

# errno_t role: 0 on success, otherwise the ErrorKind value of the first violation
ErrorCode: TypeAlias = int

EOK: ErrorCode = 0


class ErrorKind(IntEnum):
    """Most common runtime-constraint error types, with their fixed codes."""

    NOERROR = 0
    NULL_PARAMETER_NOT_ALLOWED = 1
    PARAMETER_OUT_OF_RANGE = 2
    ENVIRONMENTAL_LIMIT_NOT_MET = 3
    INVALID_FORMAT_PARAMETER_S = 4
    INVALID_FORMAT_PARAMETER_N = 5
    RSIZE_MAX_EXCEEDED = 6
    NOT_ZERO = 7
    OBJECTS_OVERLAP = 8
    NOT_IMPLEMENTED = 9
    TOKEN_END_NOT_FOUND = 10

    @property
    def message(self) -> str:
        """Human-readable fragment used in diagnostics."""
        return _MESSAGES[self]

    @property
    def is_format_violation(self) -> bool:
        return self in (ErrorKind.INVALID_FORMAT_PARAMETER_S, ErrorKind.INVALID_FORMAT_PARAMETER_N)


# Diagnostic fragments. Keep these bit-exact: golden transcripts depend on them.
_MESSAGES: dict[ErrorKind, str] = {
    ErrorKind.NOERROR: "",
    ErrorKind.NULL_PARAMETER_NOT_ALLOWED: "has invalid NULL pointer argument",
    ErrorKind.PARAMETER_OUT_OF_RANGE: "parameter out of range",
    ErrorKind.ENVIRONMENTAL_LIMIT_NOT_MET: "environmental limit not met",
    ErrorKind.INVALID_FORMAT_PARAMETER_S: "invalid format parameter (%s)",
    ErrorKind.INVALID_FORMAT_PARAMETER_N: "invalid format parameter (%n)",
    ErrorKind.RSIZE_MAX_EXCEEDED: "rsize_t value exceeds RSIZE_MAX",
    ErrorKind.NOT_ZERO: "parameter must not be zero",
    ErrorKind.OBJECTS_OVERLAP: "two data structures overlap in memory",
    ErrorKind.NOT_IMPLEMENTED: "not implemented",
    ErrorKind.TOKEN_END_NOT_FOUND: "token end not found within defined bounds",
}


def message_for(kind: ErrorKind) -> str:
    """Return the fixed description fragment for ``kind``.

    Args:
        kind: A valid ErrorKind

    Returns:
        The message fragment ("" for NOERROR)
    """
    return ErrorKind(kind).message


def error_text(errnum: int) -> str:
    """Message table lookup used by strerror_s: unknown codes get a generic text."""
    try:
        return ErrorKind(errnum).message
    except ValueError:
        return f"Unknown error {errnum}"
