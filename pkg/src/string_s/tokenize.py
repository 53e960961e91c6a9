"""
strtok_s: re-entrant, bounded tokenizer.

The delimiter argument is matched as one byte sequence. A token ends at the
first occurrence of that sequence (whose first byte is overwritten with the
terminator) or at the string's own terminator. All scanning stays inside the
first ``*s1max`` bytes of the current position. Running out of that budget
while a token is still open is a kind 10 violation and leaves ``*s1max`` at 0;
a budget holding only delimiters simply means no token remains.
"""

from typing import Optional

from src.constraints.validator import (
    record_outcome,
    report_token_end_not_found,
    validate_not_null,
    validate_rsize_limit,
)
from src.core.errors import EOK
from src.core.memory import ByteBuffer
from src.core.sizes import as_size
from src.core.types import Ref
from src.string_s.common import check_capacity


def _at(buf: ByteBuffer, pos: int, delims: bytes, limit: int) -> bool:
    width = len(delims)
    return width > 0 and pos + width <= limit and buf.read(pos, width) == delims


def strtok_s(
    s1: Optional[ByteBuffer],
    s1max: Optional[Ref[int]],
    s2: Optional[bytes],
    ptr: Optional[Ref[Optional[ByteBuffer]]],
) -> Optional[ByteBuffer]:
    """Return the next token, or None.

    Args:
        s1: String to tokenize on the first call, None to continue
        s1max: In-out count of bytes left to scan
        s2: Delimiter sequence
        ptr: In-out resume position kept between calls

    Returns:
        A view of the token inside the caller's buffer, or None when no token
        remains or a constraint is violated
    """
    fn = "strtok_s"
    code = (
        validate_not_null(fn, "s1max", s1max is not None)
        or validate_not_null(fn, "s2", s2 is not None)
        or validate_not_null(fn, "ptr", ptr is not None)
        or validate_not_null(fn, "*ptr", s1 is not None or ptr.value is not None)
        or validate_rsize_limit(fn, "*s1max", s1max.value)
    )
    if code:
        return None

    buf = s1 if s1 is not None else ptr.value
    remaining = as_size(s1max.value)
    if check_capacity(fn, "*s1max", remaining, buf):
        return None
    delims = bytes(s2)

    pos = 0
    while _at(buf, pos, delims, remaining):
        pos += len(delims)
    if pos >= remaining or buf[pos] == 0:
        ptr.value = buf + pos
        s1max.value = remaining - pos
        record_outcome(fn, EOK, token=False)
        return None

    start = pos
    while pos < remaining:
        if buf[pos] == 0:
            ptr.value = buf + pos
            s1max.value = remaining - pos
            break
        if _at(buf, pos, delims, remaining):
            buf[pos] = 0
            ptr.value = buf + pos + len(delims)
            s1max.value = remaining - pos - len(delims)
            break
        pos += 1
    else:
        # The scan consumed the whole budget
        ptr.value = buf + remaining
        s1max.value = 0
        report_token_end_not_found(fn, "*ptr")
        return None

    record_outcome(fn, EOK, token=True)
    return buf + start
