#!/usr/bin/env python3
"""
Unit tests for gets_s
"""

import io
import sys
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.memory import ByteBuffer
from src.stdio_s import ByteSource, gets_s


class TestGets:
    """Test line reading into a bounded buffer"""

    def test_reads_lines(self, counting):
        source = ByteSource.from_bytes(b"hello\nworld\n")
        buf = ByteBuffer(8, fill=0x23)
        assert gets_s(buf, 8, source) == b"hello"
        assert buf.c_str() == b"hello"
        assert gets_s(buf, 8, source) == b"world"
        assert gets_s(buf, 8, source) is None
        assert buf[0] == 0
        assert counting.count == 0

    def test_line_of_n_minus_one_fits(self, counting):
        buf = ByteBuffer(4)
        assert gets_s(buf, 4, ByteSource.from_bytes(b"abc\n")) == b"abc"
        assert buf.raw() == b"abc\0"

    def test_too_long_discards_line(self, counting):
        source = ByteSource.from_bytes(b"abcd\nxy\n")
        buf = ByteBuffer(4, fill=0x23)
        assert gets_s(buf, 4, source) is None
        assert buf[0] == 0
        assert counting.messages == ["gets_s(): parameter out of range : n"]
        # The rest of the long line is gone; the next call reads the next line
        assert gets_s(buf, 4, source) == b"xy"

    def test_last_line_without_newline(self, counting):
        buf = ByteBuffer(8)
        assert gets_s(buf, 8, ByteSource.from_bytes(b"tail")) == b"tail"

    def test_empty_line(self, counting):
        buf = ByteBuffer(8, fill=0x23)
        assert gets_s(buf, 8, ByteSource.from_bytes(b"\nnext")) == b""
        assert buf[0] == 0

    def test_null_buffer(self, counting):
        assert gets_s(None, 8, ByteSource.from_bytes(b"x\n")) is None
        assert counting.messages == ["gets_s(): has invalid NULL pointer argument : s"]

    def test_zero_size(self, counting):
        assert gets_s(ByteBuffer(4), 0, ByteSource.from_bytes(b"x\n")) is None
        assert counting.codes == [7]

    def test_size_beyond_buffer(self, counting):
        buf = ByteBuffer(4, fill=0x23)
        assert gets_s(buf, 8, ByteSource.from_bytes(b"x\n")) is None
        assert counting.messages == ["gets_s(): parameter out of range : n"]
        assert buf[0] == 0

    def test_reads_stdin_by_default(self, monkeypatch, counting):
        monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(b"typed\n")))
        buf = ByteBuffer(16)
        assert gets_s(buf, 16) == b"typed"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
