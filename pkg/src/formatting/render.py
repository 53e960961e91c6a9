"""
Formatted-output engine behind the printf family.

Integer conversions are rendered here with C semantics; length modifiers
narrow the value to the width of the corresponding C type. Floating
conversions f F e E g G reuse Python's printf-style operator, which follows
C99 for those conversions. Hex-float (a A) is not rendered.
"""

import ctypes
from typing import Sequence

from src.formatting.args import (
    ArgValue,
    Char,
    Float,
    IntSlot,
    OpaqueAddress,
    SignedInt,
    Str,
    UnsignedInt,
)
from src.formatting.directives import (
    FROM_ARG,
    Directive,
    FormatError,
    FormatErrorKind,
    FormatItem,
    LengthModifier,
    Literal,
    parse_directives,
)

_BITS: dict[LengthModifier, int] = {
    LengthModifier.NONE: ctypes.sizeof(ctypes.c_int) * 8,
    LengthModifier.HH: ctypes.sizeof(ctypes.c_byte) * 8,
    LengthModifier.H: ctypes.sizeof(ctypes.c_short) * 8,
    LengthModifier.L: ctypes.sizeof(ctypes.c_long) * 8,
    LengthModifier.LL: ctypes.sizeof(ctypes.c_longlong) * 8,
    LengthModifier.J: ctypes.sizeof(ctypes.c_longlong) * 8,
    LengthModifier.Z: ctypes.sizeof(ctypes.c_size_t) * 8,
    LengthModifier.T: ctypes.sizeof(ctypes.c_ssize_t) * 8,
    LengthModifier.LONG_DOUBLE: ctypes.sizeof(ctypes.c_longlong) * 8,
}

_BASES = {"d": 10, "i": 10, "u": 10, "o": 8, "x": 16, "X": 16}


def narrow(value: int, length: LengthModifier, signed: bool) -> int:
    """Reduce ``value`` to the C type selected by ``length``."""
    bits = _BITS[length]
    value &= (1 << bits) - 1
    if signed and value >> (bits - 1):
        value -= 1 << bits
    return value


def _digits(value: int, base: int, upper: bool) -> str:
    if base == 10:
        return str(value)
    if base == 8:
        return format(value, "o")
    return format(value, "X" if upper else "x")


def _pad(body: bytes, width: int, left: bool) -> bytes:
    if len(body) >= width:
        return body
    fill = b" " * (width - len(body))
    return body + fill if left else fill + body


class _ArgCursor:
    def __init__(self, args: Sequence[ArgValue]):
        self.args = args
        self.index = 0

    def take(self, directive: Directive) -> ArgValue:
        if self.index >= len(self.args):
            raise FormatError(
                FormatErrorKind.ARG_COUNT_MISMATCH,
                directive.span[0],
                f"no argument left for {directive.source.decode('latin-1')}",
            )
        arg = self.args[self.index]
        self.index += 1
        return arg

    def take_int(self, directive: Directive) -> int:
        arg = self.take(directive)
        if isinstance(arg, (SignedInt, UnsignedInt)):
            return arg.value
        raise _mismatch(directive, arg)


def _mismatch(directive: Directive, arg: object) -> FormatError:
    return FormatError(
        FormatErrorKind.ARG_TYPE_MISMATCH,
        directive.span[0],
        f"{type(arg).__name__} does not match {directive.source.decode('latin-1')}",
    )


def _render_integer(
    d: Directive, value: int, precision: int | None, flags: frozenset[str]
) -> tuple[bytes, str]:
    """Sign/prefix plus digits, unpadded; also returns the prefix for zero padding."""
    signed = d.conversion in "di"
    value = narrow(value, d.length, signed)
    negative = value < 0
    magnitude = -value if negative else value
    digits = _digits(magnitude, _BASES[d.conversion], d.conversion == "X")

    if precision is not None:
        if precision == 0 and magnitude == 0:
            digits = ""
        digits = digits.rjust(precision, "0")

    prefix = ""
    if signed:
        if negative:
            prefix = "-"
        elif "+" in flags:
            prefix = "+"
        elif " " in flags:
            prefix = " "
    if "#" in flags:
        if d.conversion == "o" and not digits.startswith("0"):
            digits = "0" + digits
        elif d.conversion in "xX" and magnitude != 0:
            prefix = "0" + d.conversion

    return (prefix + digits).encode("ascii"), prefix


def _render_float(d: Directive, value: float, width: int, precision: int | None, flags: frozenset[str]) -> bytes:
    spec = "%" + "".join(f for f in "-+ #0" if f in flags)
    if width:
        spec += str(width)
    if precision is not None:
        spec += f".{precision}"
    spec += d.conversion
    return (spec % value).encode("ascii")


def render_directive(d: Directive, cursor: _ArgCursor, written: int) -> bytes:
    """Render one directive, consuming its arguments from ``cursor``."""
    if d.conversion == "%":
        return b"%"

    flags = d.flags
    width = 0
    if d.width is FROM_ARG:
        width = cursor.take_int(d)
        if width < 0:
            flags = flags | {"-"}
            width = -width
    elif d.width is not None:
        width = d.width

    precision: int | None = None
    if d.precision is FROM_ARG:
        precision = cursor.take_int(d)
        if precision < 0:
            precision = None
    elif d.precision is not None:
        precision = d.precision

    left = "-" in flags
    conv = d.conversion
    arg = cursor.take(d)

    if conv in _BASES:
        if not isinstance(arg, (SignedInt, UnsignedInt, Char)):
            raise _mismatch(d, arg)
        value = arg.byte if isinstance(arg, Char) else arg.value
        body, prefix = _render_integer(d, value, precision, flags)
        if "0" in flags and not left and precision is None and len(body) < width:
            zeros = b"0" * (width - len(body))
            return prefix.encode("ascii") + zeros + body[len(prefix):]
        return _pad(body, width, left)

    if conv in "fFeEgG":
        if not isinstance(arg, (Float, SignedInt, UnsignedInt)):
            raise _mismatch(d, arg)
        return _render_float(d, float(arg.value), width, precision, flags)

    if conv in "aA":
        raise FormatError(FormatErrorKind.ARG_TYPE_MISMATCH, d.span[0], "hex-float conversions are not rendered")

    if conv == "c":
        if isinstance(arg, Char):
            byte = arg.byte
        elif isinstance(arg, (SignedInt, UnsignedInt)):
            byte = arg.value & 0xFF
        else:
            raise _mismatch(d, arg)
        return _pad(bytes([byte]), width, left)

    if conv == "s":
        if not isinstance(arg, Str):
            raise _mismatch(d, arg)
        text = b"(null)" if arg.value is None else arg.value.split(b"\0", 1)[0]
        if precision is not None:
            text = text[:precision]
        return _pad(text, width, left)

    if conv == "p":
        if isinstance(arg, OpaqueAddress):
            address = arg.address
        elif isinstance(arg, (SignedInt, UnsignedInt)):
            address = arg.value
        else:
            raise _mismatch(d, arg)
        text = b"(nil)" if address == 0 else ("0x%x" % address).encode("ascii")
        return _pad(text, width, left)

    # conv == "n"
    if not isinstance(arg, IntSlot):
        raise _mismatch(d, arg)
    arg.value = written
    return b""


def render(items: Sequence[FormatItem], args: Sequence[ArgValue]) -> bytes:
    """Produce the output for a parsed format.

    Extra arguments are ignored, as in C.

    Raises:
        FormatError: ArgCountMismatch when arguments run out, ArgTypeMismatch
            when an argument's tag does not fit its directive
    """
    out = bytearray()
    cursor = _ArgCursor(args)
    for item in items:
        if isinstance(item, Literal):
            out += item.source
        else:
            out += render_directive(item, cursor, len(out))
    return bytes(out)


def format_bytes(fmt: bytes, *args: ArgValue) -> bytes:
    """Parse and render in one step, without any constraint checks."""
    return render(parse_directives(fmt), args)
