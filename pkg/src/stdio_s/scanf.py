"""
The scanf_s family over a small hand-written scanner.

Scan directive grammar::

    % '*'? width? length? conversion

with conversions ``d i u o x X s c %``. ``%n`` is rejected as kind 5;
anything else (floating conversions, scansets) is rejected as malformed.
Every %s and %c target is an ``OutBuffer`` carrying its capacity; a match
that does not fit is a kind 2 violation that empties the target and ends the
scan.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from src.constraints.validator import (
    record_outcome,
    report_format_violation,
    validate_not_null,
    validate_value_in_range,
)
from src.core.errors import EOK, ErrorCode, ErrorKind
from src.core.types import ValueRange
from src.formatting.args import ArgValue, IntSlot, OutBuffer
from src.formatting.directives import FormatError, FormatErrorKind, LengthModifier, read_length, read_number
from src.formatting.render import narrow
from src.formatting.validation import MALFORMED
from src.infrastructure.logging_config import get_logger
from src.stdio_s.streams import ByteSource, stdin_source

logger = get_logger(__name__)

EOF = -1

SCAN_CONVERSIONS = frozenset("diuoxXsc%n")
_WHITESPACE = frozenset(b" \t\n\v\f\r")
_INT_BASES = {"d": 10, "u": 10, "i": 0, "o": 8, "x": 16, "X": 16}


@dataclass(frozen=True)
class ScanDirective:
    conversion: str
    suppress: bool = False
    width: Optional[int] = None
    length: LengthModifier = LengthModifier.NONE
    offset: int = 0


ScanItem = Union[bytes, ScanDirective]


def parse_scan_format(fmt: bytes) -> list[ScanItem]:
    """Split a scan format into literal byte runs and directives.

    Raises:
        FormatError: MalformedDirective for anything outside the grammar
    """
    items: list[ScanItem] = []
    pos = 0
    while pos < len(fmt):
        pct = fmt.find(b"%", pos)
        if pct < 0:
            items.append(bytes(fmt[pos:]))
            break
        if pct > pos:
            items.append(bytes(fmt[pos:pct]))
        cur = pct + 1
        suppress = fmt[cur : cur + 1] == b"*"
        if suppress:
            cur += 1
        width, cur = read_number(fmt, cur)
        length, cur = read_length(fmt, cur)
        if cur >= len(fmt):
            raise FormatError(FormatErrorKind.MALFORMED_DIRECTIVE, pct, "format ends inside a directive")
        conversion = chr(fmt[cur])
        if conversion not in SCAN_CONVERSIONS:
            raise FormatError(FormatErrorKind.MALFORMED_DIRECTIVE, pct, f"unsupported scan conversion {conversion!r}")
        if conversion == "%" and (suppress or width is not None or length is not LengthModifier.NONE):
            raise FormatError(FormatErrorKind.MALFORMED_DIRECTIVE, pct, "'%%' takes no modifiers")
        if width == 0:
            raise FormatError(FormatErrorKind.MALFORMED_DIRECTIVE, pct, "zero field width")
        items.append(ScanDirective(conversion, suppress, width, length, pct))
        pos = cur + 1
    return items


def _check_format(function: str, fmt: bytes, outs: Sequence[ArgValue]) -> tuple[ErrorCode, list[ScanItem]]:
    try:
        items = parse_scan_format(fmt)
    except FormatError as exc:
        logger.debug(f"{function}: {exc}")
        return report_format_violation(function, ErrorKind.INVALID_FORMAT_PARAMETER_N, MALFORMED), []

    directives = [item for item in items if isinstance(item, ScanDirective)]
    if any(d.conversion == "n" for d in directives):
        return report_format_violation(function, ErrorKind.INVALID_FORMAT_PARAMETER_N, "%n"), []

    slot = 0
    for d in directives:
        if d.suppress or d.conversion == "%":
            continue
        target = outs[slot] if slot < len(outs) else None
        wanted = OutBuffer if d.conversion in "sc" else IntSlot
        if not isinstance(target, wanted):
            return report_format_violation(function, ErrorKind.INVALID_FORMAT_PARAMETER_N, MALFORMED), []
        slot += 1
    return EOK, items


def _skip_space(source: ByteSource) -> None:
    while (byte := source.peek()) is not None and byte in _WHITESPACE:
        source.read_byte()


def _digit_value(byte: int) -> int:
    ch = chr(byte).lower()
    return int(ch, 16) if ch in "0123456789abcdef" else 99


def _scan_integer(source: ByteSource, d: ScanDirective) -> Optional[int]:
    """Read an integer field; None when no digits could be matched."""
    limit = d.width if d.width is not None else 1 << 62
    text = bytearray()

    def take() -> None:
        text.append(source.read_byte())

    if len(text) < limit and source.peek() in (ord("+"), ord("-")):
        take()
    base = _INT_BASES[d.conversion]
    if base in (0, 16) and len(text) < limit and source.peek() == ord("0"):
        take()
        if len(text) < limit and source.peek() in (ord("x"), ord("X")):
            take()
            base = 16
        elif base == 0:
            base = 8
    if base == 0:
        base = 10

    while len(text) < limit and (byte := source.peek()) is not None and _digit_value(byte) < base:
        take()

    digits = bytes(text).lstrip(b"+-")
    if digits.lower().startswith(b"0x"):
        digits = digits[2:]
        if not digits:
            # "0x" with no hex digits matches the leading zero only
            return 0
    if not digits:
        return None
    value = int(digits, base)
    return -value if text.startswith(b"-") else value


def _store_text(function: str, position: int, target: OutBuffer, data: bytes, terminate: bool) -> ErrorCode:
    needed = len(data) + (1 if terminate else 0)
    code = validate_value_in_range(function, f"argument {position}", needed, ValueRange(0, target.capacity))
    if code:
        if target.capacity and target.buffer.capacity:
            target.buffer[0] = 0
        return code
    target.buffer.write(0, data + (b"\0" if terminate else b""))
    return EOK


def scan_parse(function: str, source: Optional[ByteSource], fmt: Optional[bytes], outs: Sequence[ArgValue]) -> int:
    """Scan ``source`` according to ``fmt``, assigning into ``outs``.

    Returns:
        Number of assigned targets, EOF when input ends before the first
        conversion, or the negated kind code when the call is rejected up front
    """
    if isinstance(fmt, str):
        fmt = fmt.encode("latin-1")
    code = validate_not_null(function, "s", source is not None) or validate_not_null(
        function, "format", fmt is not None
    )
    if not code:
        code, items = _check_format(function, fmt, outs)
    if code:
        return -code

    assigned = 0
    converted = False
    slots = iter(outs)

    for item in items:
        if isinstance(item, bytes):
            for byte in item:
                if byte in _WHITESPACE:
                    _skip_space(source)
                    continue
                if source.peek() != byte:
                    return assigned if converted or source.peek() is not None else EOF
                source.read_byte()
            continue

        d = item
        if d.conversion != "c":
            _skip_space(source)
        if source.peek() is None:
            return assigned if converted else EOF

        if d.conversion == "%":
            if source.read_byte() != ord("%"):
                return assigned
            continue

        if d.conversion in _INT_BASES:
            value = _scan_integer(source, d)
            if value is None:
                return assigned
            converted = True
            if not d.suppress:
                target = next(slots)
                target.value = narrow(value, d.length, signed=d.conversion in "di")
                assigned += 1
            continue

        if d.conversion == "s":
            limit = d.width if d.width is not None else 1 << 62
            word = bytearray()
            while len(word) < limit and (byte := source.peek()) is not None and byte not in _WHITESPACE:
                word.append(source.read_byte())
            data, terminate = bytes(word), True
        else:
            count = d.width or 1
            chars = bytearray()
            while len(chars) < count and (byte := source.read_byte()) is not None:
                chars.append(byte)
            if len(chars) < count:
                return assigned if converted else EOF
            data, terminate = bytes(chars), False

        converted = True
        if d.suppress:
            continue
        if _store_text(function, assigned + 1, next(slots), data, terminate):
            return assigned
        assigned += 1

    record_outcome(function, EOK, assigned=assigned)
    return assigned


def _source_for(data: Union[bytes, str, None]) -> Optional[ByteSource]:
    if data is None:
        return None
    if isinstance(data, str):
        data = data.encode("latin-1")
    return ByteSource.from_bytes(data)


def sscanf_s(s: Union[bytes, str, None], fmt: Union[bytes, str, None], *outs: ArgValue) -> int:
    return scan_parse("sscanf_s", _source_for(s), fmt, outs)


def vsscanf_s(s: Union[bytes, str, None], fmt: Union[bytes, str, None], outs: Sequence[ArgValue]) -> int:
    return scan_parse("vsscanf_s", _source_for(s), fmt, outs)


def fscanf_s(stream: Optional[ByteSource], fmt: Union[bytes, str, None], *outs: ArgValue) -> int:
    return scan_parse("fscanf_s", stream, fmt, outs)


def vfscanf_s(stream: Optional[ByteSource], fmt: Union[bytes, str, None], outs: Sequence[ArgValue]) -> int:
    return scan_parse("vfscanf_s", stream, fmt, outs)


def scanf_s(fmt: Union[bytes, str, None], *outs: ArgValue) -> int:
    return scan_parse("scanf_s", stdin_source(), fmt, outs)


def vscanf_s(fmt: Union[bytes, str, None], outs: Sequence[ArgValue]) -> int:
    return scan_parse("vscanf_s", stdin_source(), fmt, outs)
