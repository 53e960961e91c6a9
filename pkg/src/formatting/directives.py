"""
Format-string model: a single-pass scanner for printf-style directives.

Grammar::

    % flags* width? ('.' precision)? length? conversion

flags are ``- + space # 0``; width and precision are digits or ``*``; length
is one of ``hh h l ll j z t L``. Concatenating the ``source`` of every item
reproduces the format byte for byte.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, TypeAlias, Union


class FormatErrorKind(str, Enum):
    MALFORMED_DIRECTIVE = "MalformedDirective"
    ARG_COUNT_MISMATCH = "ArgCountMismatch"
    ARG_TYPE_MISMATCH = "ArgTypeMismatch"


class FormatError(Exception):
    """A format string or argument list that cannot be processed.

    Attributes:
        kind: What went wrong
        offset: Byte offset of the offending directive's '%'
        description: Human-readable explanation
    """

    def __init__(self, kind: FormatErrorKind, offset: int, description: str):
        super().__init__(f"{kind.value} at offset {offset}: {description}")
        self.kind = kind
        self.offset = offset
        self.description = description


class _FromArg:
    def __repr__(self) -> str:
        return "FROM_ARG"


# Width or precision supplied by an int argument ('*')
FROM_ARG = _FromArg()

FieldSpec: TypeAlias = Union[int, _FromArg, None]


class LengthModifier(str, Enum):
    NONE = ""
    HH = "hh"
    H = "h"
    L = "l"
    LL = "ll"
    J = "j"
    Z = "z"
    T = "t"
    LONG_DOUBLE = "L"


FLAG_CHARS = frozenset("-+ #0")
PRINTF_CONVERSIONS = frozenset("diouxXfFeEgGaAcspn%")
INTEGER_CONVERSIONS = frozenset("diouxX")
FLOAT_CONVERSIONS = frozenset("fFeEgGaA")


@dataclass(frozen=True)
class Literal:
    """A run of ordinary bytes copied to the output unchanged."""

    source: bytes


@dataclass(frozen=True)
class Directive:
    """One conversion specification."""

    conversion: str
    flags: frozenset[str] = field(default_factory=frozenset)
    width: FieldSpec = None
    precision: FieldSpec = None
    length: LengthModifier = LengthModifier.NONE
    span: tuple[int, int] = (0, 0)
    source: bytes = b""

    @property
    def consumes(self) -> int:
        """Arguments this directive takes from the list, '*' fields included."""
        count = (self.width is FROM_ARG) + (self.precision is FROM_ARG)
        return count if self.conversion == "%" else count + 1


FormatItem: TypeAlias = Union[Literal, Directive]


def read_length(fmt: bytes, pos: int) -> tuple[LengthModifier, int]:
    pair = fmt[pos : pos + 2]
    if pair in (b"hh", b"ll"):
        return LengthModifier(pair.decode()), pos + 2
    ch = fmt[pos : pos + 1]
    if ch and ch in b"hljztL":
        return LengthModifier(ch.decode()), pos + 1
    return LengthModifier.NONE, pos


def read_number(fmt: bytes, pos: int) -> tuple[Optional[int], int]:
    start = pos
    while pos < len(fmt) and 0x30 <= fmt[pos] <= 0x39:
        pos += 1
    if pos == start:
        return None, pos
    return int(fmt[start:pos]), pos


def _parse_one(fmt: bytes, start: int, conversions: frozenset[str]) -> Directive:
    pos = start + 1
    flags: set[str] = set()
    while pos < len(fmt) and chr(fmt[pos]) in FLAG_CHARS:
        flags.add(chr(fmt[pos]))
        pos += 1
    lone_zero = fmt[start + 1 : pos] == b"0"

    width: FieldSpec
    if fmt[pos : pos + 1] == b"*":
        width, pos = FROM_ARG, pos + 1
    else:
        width, pos = read_number(fmt, pos)
    # "%0d": the zero doubles as an explicit width of 0
    if lone_zero and width is None and fmt[pos : pos + 1] != b".":
        width = 0

    precision: FieldSpec = None
    if fmt[pos : pos + 1] == b".":
        pos += 1
        if fmt[pos : pos + 1] == b"*":
            precision, pos = FROM_ARG, pos + 1
        else:
            number, pos = read_number(fmt, pos)
            precision = number or 0

    length, pos = read_length(fmt, pos)

    if pos >= len(fmt):
        raise FormatError(FormatErrorKind.MALFORMED_DIRECTIVE, start, "format ends inside a directive")
    conversion = chr(fmt[pos])
    if conversion not in conversions:
        raise FormatError(
            FormatErrorKind.MALFORMED_DIRECTIVE, start, f"unknown conversion character {conversion!r}"
        )
    pos += 1

    if conversion == "%" and (flags or width is not None or precision is not None or length is not LengthModifier.NONE):
        raise FormatError(FormatErrorKind.MALFORMED_DIRECTIVE, start, "'%%' takes no flags, width, precision or length")

    return Directive(
        conversion=conversion,
        flags=frozenset(flags),
        width=width,
        precision=precision,
        length=length,
        span=(start, pos),
        source=bytes(fmt[start:pos]),
    )


def parse_directives(fmt: bytes, conversions: frozenset[str] = PRINTF_CONVERSIONS) -> list[FormatItem]:
    """Tokenize a printf-style format.

    Args:
        fmt: Format bytes (may be empty)
        conversions: Accepted conversion characters

    Returns:
        Literals and directives in source order; adjacent literal bytes merge

    Raises:
        FormatError: MalformedDirective for a truncated directive, an unknown
            conversion or a modified '%%'
    """
    if isinstance(fmt, str):
        fmt = fmt.encode("latin-1")
    items: list[FormatItem] = []
    literal_start = 0
    pos = 0
    while True:
        pct = fmt.find(b"%", pos)
        if pct < 0:
            break
        if pct > literal_start:
            items.append(Literal(bytes(fmt[literal_start:pct])))
        directive = _parse_one(fmt, pct, conversions)
        items.append(directive)
        pos = literal_start = directive.span[1]
    if literal_start < len(fmt):
        items.append(Literal(bytes(fmt[literal_start:])))
    return items


def directives_of(items: list[FormatItem]) -> list[Directive]:
    return [item for item in items if isinstance(item, Directive)]
