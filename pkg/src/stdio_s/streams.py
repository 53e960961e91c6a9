"""
Byte sinks and sources standing in for C ``FILE`` streams.

Sinks count every byte they accept; sources deliver each byte once, with a
one-byte lookahead for the scanner.
"""

import io
import sys
from typing import BinaryIO, Optional


class ByteSink:
    """Append-only byte target with write-count accounting."""

    def __init__(self):
        self.count = 0

    def write(self, data: bytes) -> int:
        self._write(bytes(data))
        self.count += len(data)
        return len(data)

    def _write(self, data: bytes) -> None:
        raise NotImplementedError

    def flush(self) -> None:
        pass


class MemorySink(ByteSink):
    """Collects output in memory."""

    def __init__(self):
        super().__init__()
        self._buffer = bytearray()

    def _write(self, data: bytes) -> None:
        self._buffer += data

    def getvalue(self) -> bytes:
        return bytes(self._buffer)


class StreamSink(ByteSink):
    """Writes to a binary stream such as ``sys.stdout.buffer``."""

    def __init__(self, stream: BinaryIO):
        super().__init__()
        self.stream = stream

    def _write(self, data: bytes) -> None:
        self.stream.write(data)

    def flush(self) -> None:
        self.stream.flush()


def stdout_sink() -> StreamSink:
    """Sink bound to the current standard output."""
    return StreamSink(sys.stdout.buffer)


class ByteSource:
    """Readable byte stream with lookahead and end-of-input signalling."""

    def __init__(self, stream: BinaryIO):
        self.stream = stream
        self._pending: Optional[int] = None

    @classmethod
    def from_bytes(cls, data: bytes) -> "ByteSource":
        return cls(io.BytesIO(bytes(data)))

    def peek(self) -> Optional[int]:
        """Next byte without consuming it; None at end of input."""
        if self._pending is None:
            chunk = self.stream.read(1)
            if not chunk:
                return None
            self._pending = chunk[0]
        return self._pending

    def read_byte(self) -> Optional[int]:
        byte = self.peek()
        self._pending = None
        return byte

    def read_line(self) -> bytes:
        """Bytes up to and including the next newline (empty at end of input)."""
        line = bytearray()
        while True:
            byte = self.read_byte()
            if byte is None:
                break
            line.append(byte)
            if byte == 0x0A:
                break
        return bytes(line)

    def at_eof(self) -> bool:
        return self.peek() is None


def stdin_source() -> ByteSource:
    """Source bound to the current standard input."""
    return ByteSource(sys.stdin.buffer)
