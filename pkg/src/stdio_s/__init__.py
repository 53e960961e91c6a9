"""Bounds-checked formatted I/O over byte sinks and sources."""

from src.stdio_s.gets import gets_s
from src.stdio_s.printf import (
    format_render_bounded,
    format_write,
    fprintf_s,
    printf_s,
    snprintf_s,
    sprintf_s,
    vfprintf_s,
    vprintf_s,
    vsnprintf_s,
    vsprintf_s,
)
from src.stdio_s.scanf import (
    EOF,
    fscanf_s,
    parse_scan_format,
    scan_parse,
    scanf_s,
    sscanf_s,
    vfscanf_s,
    vscanf_s,
    vsscanf_s,
)
from src.stdio_s.streams import ByteSink, ByteSource, MemorySink, StreamSink, stdin_source, stdout_sink

__all__ = [
    "ByteSink",
    "ByteSource",
    "EOF",
    "format_render_bounded",
    "format_write",
    "fprintf_s",
    "fscanf_s",
    "gets_s",
    "MemorySink",
    "parse_scan_format",
    "printf_s",
    "scan_parse",
    "scanf_s",
    "snprintf_s",
    "sprintf_s",
    "sscanf_s",
    "stdin_source",
    "stdout_sink",
    "StreamSink",
    "vfprintf_s",
    "vfscanf_s",
    "vprintf_s",
    "vscanf_s",
    "vsnprintf_s",
    "vsprintf_s",
    "vsscanf_s",
]
