"""Core types shared by every safer-library module.

Error taxonomy, size guards, violation records and the byte-buffer memory model.
"""

from src.core.errors import EOK, ErrorCode, ErrorKind, error_text, message_for
from src.core.memory import ByteBuffer, CString, allocate_frame, bounded_strlen
from src.core.sizes import RSIZE_MAX, SIZE_MAX, SIZE_WIDTH, as_size
from src.core.types import MemRegion, Ref, ValueRange, Violation, regions_overlap

__all__ = [
    "allocate_frame",
    "as_size",
    "bounded_strlen",
    "ByteBuffer",
    "CString",
    "EOK",
    "ErrorCode",
    "ErrorKind",
    "error_text",
    "MemRegion",
    "message_for",
    "Ref",
    "regions_overlap",
    "RSIZE_MAX",
    "SIZE_MAX",
    "SIZE_WIDTH",
    "ValueRange",
    "Violation",
]
