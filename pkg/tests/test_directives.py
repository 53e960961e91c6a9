#!/usr/bin/env python3
"""
Unit tests for the format-string directive scanner
"""

import random
import sys
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.formatting.directives import (
    FROM_ARG,
    Directive,
    FormatError,
    FormatErrorKind,
    LengthModifier,
    Literal,
    directives_of,
    parse_directives,
)


class TestParseDirectives:
    """Test parse_directives on hand-picked formats"""

    def test_empty_format(self):
        assert parse_directives(b"") == []

    def test_literal_only(self):
        assert parse_directives(b"hello world") == [Literal(b"hello world")]

    def test_full_directive(self):
        (d,) = parse_directives(b"%-08.3lld")
        assert d.conversion == "d"
        assert d.flags == frozenset("-0")
        assert d.width == 8
        assert d.precision == 3
        assert d.length is LengthModifier.LL
        assert d.span == (0, 9)

    def test_star_fields(self):
        (d,) = parse_directives(b"%*.*f")
        assert d.width is FROM_ARG
        assert d.precision is FROM_ARG
        assert d.consumes == 3

    def test_bare_precision_is_zero(self):
        (d,) = parse_directives(b"%.d")
        assert d.precision == 0

    def test_lone_zero_is_flag_and_width(self):
        (d,) = parse_directives(b"%0d")
        assert d.flags == frozenset("0")
        assert d.width == 0

    def test_zero_flag_before_width(self):
        (d,) = parse_directives(b"%05d")
        assert d.flags == frozenset("0")
        assert d.width == 5

    def test_zero_flag_before_precision(self):
        (d,) = parse_directives(b"%0.2f")
        assert d.flags == frozenset("0")
        assert d.width is None
        assert d.precision == 2

    def test_every_decimal_width(self):
        for n in range(1000):
            (d,) = parse_directives(b"%" + str(n).encode("ascii") + b"d")
            assert d.width == n, n
            assert d.conversion == "d"

    def test_percent_literal(self):
        items = parse_directives(b"100%% sure")
        assert items == [
            Literal(b"100"),
            Directive(conversion="%", span=(3, 5), source=b"%%"),
            Literal(b" sure"),
        ]
        assert items[1].consumes == 0

    def test_escaped_n_is_not_a_directive(self):
        items = parse_directives(b"[%%n]")
        assert [d.conversion for d in directives_of(items)] == ["%"]

    def test_mixed(self):
        items = parse_directives(b"a=%d, b=%5s\n")
        assert [type(i).__name__ for i in items] == ["Literal", "Directive", "Literal", "Directive", "Literal"]
        assert [d.conversion for d in directives_of(items)] == ["d", "s"]

    def test_length_modifiers(self):
        for text, length in [
            (b"%hhd", LengthModifier.HH),
            (b"%hd", LengthModifier.H),
            (b"%ld", LengthModifier.L),
            (b"%lld", LengthModifier.LL),
            (b"%jd", LengthModifier.J),
            (b"%zu", LengthModifier.Z),
            (b"%td", LengthModifier.T),
            (b"%Lf", LengthModifier.LONG_DOUBLE),
        ]:
            (d,) = parse_directives(text)
            assert d.length is length, text

    def test_accepts_str(self):
        assert directives_of(parse_directives("%d"))[0].conversion == "d"


class TestMalformed:
    """Test MalformedDirective errors"""

    @pytest.mark.parametrize("fmt", [b"%", b"abc%", b"%5", b"%-", b"%ll", b"%q", b"%5%", b"%-%", b"x %y"])
    def test_rejected(self, fmt):
        with pytest.raises(FormatError) as exc_info:
            parse_directives(fmt)
        assert exc_info.value.kind is FormatErrorKind.MALFORMED_DIRECTIVE

    def test_offset_points_at_percent(self):
        with pytest.raises(FormatError) as exc_info:
            parse_directives(b"ok %d then %q")
        assert exc_info.value.offset == 11

    def test_restricted_conversions(self):
        with pytest.raises(FormatError):
            parse_directives(b"%f", frozenset("d%"))


class TestSourceCoverage:
    """Concatenated item sources reproduce the format"""

    PIECES = [b"abc", b" ", b"\n", b"%%", b"%d", b"%-5s", b"%08.3f", b"%*d", b"%lln", b"%.*s", b"%c", b"%#x", b"%p", b"\t"]

    def test_random_formats(self):
        rng = random.Random(1234)
        for _ in range(500):
            fmt = b"".join(rng.choice(self.PIECES) for _ in range(rng.randint(0, 12)))
            items = parse_directives(fmt)
            assert b"".join(item.source for item in items) == fmt
            # Adjacent literals always merge
            for left, right in zip(items, items[1:]):
                assert not (isinstance(left, Literal) and isinstance(right, Literal))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
