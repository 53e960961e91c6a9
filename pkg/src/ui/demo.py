"""
Re-creations of the two classic safer-library test programs.

Both install a handler (ignore by default), run a fixed sequence of calls
against a byte sink, and print results with plain unchecked formatting. With
``diagnostics`` set to a sink over the same stream, violations and payload
interleave in call order, which is how the golden transcripts are produced.
"""

import errno
from contextlib import contextmanager
from typing import Iterator, Optional

from src.constraints.diagnostics import DiagnosticSink, set_diagnostic_sink
from src.constraints.handlers import Handler, ignore_handler, set_constraint_handler
from src.core.memory import ByteBuffer, allocate_frame
from src.core.types import Ref
from src.formatting.args import SignedInt, Str, UnsignedInt
from src.formatting.render import format_bytes
from src.infrastructure.logging_config import get_logger
from src.infrastructure.metrics import get_metrics
from src.stdio_s.printf import format_write
from src.stdio_s.streams import ByteSink
from src.string_s import (
    memcpy_s,
    memmove_s,
    strcat_s,
    strcpy_s,
    strerror_s,
    strerrorlen_s,
    strncat_s,
    strncpy_s,
    strnlen_s,
    strtok_s,
)

logger = get_logger(__name__)

BUFFER_SIZE = 1024


@contextmanager
def demo_environment(handler: Handler, diagnostics: Optional[DiagnosticSink]) -> Iterator[None]:
    """Install handler and diagnostic sink for the duration of a demo."""
    previous_handler = set_constraint_handler(handler)
    previous_sink = set_diagnostic_sink(diagnostics) if diagnostics is not None else None
    try:
        yield
    finally:
        set_constraint_handler(previous_handler)
        if diagnostics is not None:
            set_diagnostic_sink(previous_sink)


def _say(out: ByteSink, fmt: bytes, *args) -> None:
    out.write(format_bytes(fmt, *args))


def _show(out: ByteSink, label: bytes, buf: ByteBuffer) -> None:
    _say(out, b"%s: %s\n", Str(label), Str(buf.c_str()))


def run_string_demo(
    out: ByteSink,
    handler: Handler = ignore_handler,
    diagnostics: Optional[DiagnosticSink] = None,
) -> None:
    """String and memory functions: seven failing calls, then normal use."""
    with get_metrics().track_demo("string"), demo_environment(handler, diagnostics):
        buffer2, buffer1 = allocate_frame(BUFFER_SIZE, BUFFER_SIZE)

        _say(out, b"strcpy_s failure test:\t")
        strcpy_s(buffer1, 1024, None)
        _say(out, b"strncpy_s failure test:\t")
        strncpy_s(buffer1, 10, buffer2, 50)
        _say(out, b"strncat_s failure test:\t")
        strcat_s(buffer1, -1, buffer2)
        _say(out, b"strncat_s failure test:\t")
        strncat_s(None, 1024, None, 50)
        _say(out, b"strncat_s failure test:\t")
        strncat_s(buffer1, 1024, buffer1 - 10, 50)
        _say(out, b"memcpy_s failure test:\t")
        memcpy_s(buffer1, 1024, buffer2, -1)
        _say(out, b"memmove_s failure test:\t")
        memmove_s(buffer1, 1023, None, 1024)

        strcpy_s(buffer1, 1024, b"test string")
        _show(out, b"strcpy_s", buffer1)
        strncpy_s(buffer2, 1024, buffer1, 1024)
        _show(out, b"strncpy_s", buffer2)
        strcat_s(buffer1, 1024, buffer2)
        _show(out, b"strcat_s", buffer1)
        strncat_s(buffer1, 1024, buffer2, 50)
        _show(out, b"strncat_s", buffer1)
        memmove_s(buffer2, 1024, buffer1, 34)
        _show(out, b"memmove_s", buffer2)
        memcpy_s(buffer2, 1024, buffer1, 34)
        _show(out, b"memcpy_s", buffer2)

        _say(out, b"strnlen_s(buffer1): %zu\n", UnsignedInt(strnlen_s(buffer1, 1024)))
        _say(out, b"strerrorlen_s(EINVAL): %zu\n", UnsignedInt(strerrorlen_s(errno.EINVAL)))
        strerror_s(buffer2, 1014, errno.EINVAL)
        _say(out, b"%s\n", Str(buffer2.c_str()))

        remaining = Ref(strnlen_s(buffer1, 100))
        ptr: Ref[Optional[ByteBuffer]] = Ref(None)
        token = strtok_s(buffer1, remaining, b" ", ptr)
        _report_token(out, token, remaining, ptr)
        token = strtok_s(None, remaining, b"gt", ptr)
        _report_token(out, token, remaining, ptr)
        token = strtok_s(None, remaining, b"x", ptr)
        _report_token(out, token, remaining, ptr)

        _say(out, b"size: %zu\n", UnsignedInt(strnlen_s(b"12345", 10)))
    logger.debug("string demo finished")


def _report_token(out: ByteSink, token: Optional[ByteBuffer], remaining: Ref[int], ptr: Ref) -> None:
    _say(
        out,
        b"strtok_s token: %s, remaining length: %zu, remaining substring: %s\n",
        Str(token.c_str() if token is not None else None),
        UnsignedInt(remaining.value),
        Str(ptr.value.c_str() if ptr.value is not None else None),
    )


STDIO_FORMATS: tuple[tuple[bytes, tuple], ...] = (
    (b"valid s = [%s]\n", (Str(b"valid"),)),
    (b"  valid n1 = [%%n]\n\n", ()),
    (b"invalid n2 = [%n]\n", ()),
    (b"  valid n3 = [%%n]\n\n", ()),
    (b"invalid n4 = [%%%n]\n", ()),
    (b"invalid s = [%s]\n", (Str(None),)),
    (b"invalid n = [%n]\n", ()),
)


def run_stdio_demo(
    out: ByteSink,
    handler: Handler = ignore_handler,
    diagnostics: Optional[DiagnosticSink] = None,
    sloppy: Optional[bytes] = None,
) -> None:
    """printf_s with valid formats, %n formats and a null %s argument.

    Args:
        out: Payload sink
        handler: Constraint handler for the run
        diagnostics: Diagnostic sink (None keeps the current one)
        sloppy: Untrusted format passed straight to printf_s, before the fixed cases
    """
    with get_metrics().track_demo("stdio"), demo_environment(handler, diagnostics):
        if sloppy is not None:
            _say(out, b"Sloppy programming zone: [[\n")
            format_write("printf_s", out, sloppy, ())
            _say(out, b"\n\n")

        for fmt, args in STDIO_FORMATS:
            format_write("printf_s", out, fmt, args)

        ret = format_write("printf_s", out, b"%n", ())
        _say(out, b"return value for %%n: %d\n", SignedInt(ret))
        ret = format_write("printf_s", out, b"%s", (Str(None),))
        _say(out, b"return value for NULL %%s: %d\n", SignedInt(ret))
    logger.debug("stdio demo finished")
