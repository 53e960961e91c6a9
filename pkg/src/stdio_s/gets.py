"""gets_s: read one line into a bounded buffer."""

from typing import Optional

from src.constraints.validator import (
    record_outcome,
    report_violation,
    validate_not_null,
    validate_not_zero,
    validate_rsize_limit,
)
from src.core.errors import EOK, ErrorKind
from src.core.memory import ByteBuffer
from src.core.sizes import as_size
from src.core.types import Violation
from src.stdio_s.streams import ByteSource, stdin_source
from src.string_s.common import check_capacity, terminate_on_failure

_NEWLINE = 0x0A


def gets_s(s: Optional[ByteBuffer], n: int, source: Optional[ByteSource] = None) -> Optional[bytes]:
    """Read a line from ``source`` (standard input by default) into ``s``.

    The newline is consumed but not stored. A line with ``n - 1`` or more
    bytes before its newline is a kind 2 violation: the rest of the line is
    discarded, ``s[0]`` is set to the terminator and None is returned.

    Returns:
        The line without its newline, or None on violation or end of input
    """
    fn = "gets_s"
    n = as_size(n)
    code = (
        validate_not_null(fn, "s", s is not None)
        or validate_rsize_limit(fn, "n", n)
        or validate_not_zero(fn, "n", n)
        or check_capacity(fn, "n", n, s)
    )
    if code:
        terminate_on_failure(s, n)
        return None

    source = source if source is not None else stdin_source()
    line = bytearray()
    saw_newline = False
    while True:
        byte = source.read_byte()
        if byte is None:
            break
        if byte == _NEWLINE:
            saw_newline = True
            break
        if len(line) == n - 1:
            while (rest := source.read_byte()) is not None and rest != _NEWLINE:
                pass
            s[0] = 0
            report_violation(Violation(ErrorKind.PARAMETER_OUT_OF_RANGE, fn, "n", detail=str(n)))
            return None
        line.append(byte)

    if not line and not saw_newline:
        s[0] = 0
        return None

    s.write(0, bytes(line) + b"\0")
    record_outcome(fn, EOK, length=len(line))
    return bytes(line)
