"""safec runtime - bounds-checked C library functions with runtime-constraint handling.

Every operation validates its arguments before touching caller memory and
routes violations through a process-global constraint handler.

Example:
    from src import ByteBuffer, ignore_handler, set_constraint_handler, strcpy_s

    set_constraint_handler(ignore_handler)
    dest = ByteBuffer(16)
    strcpy_s(dest, 16, b"hello")       # 0
    strcpy_s(dest, 16, None)           # 1, "strcpy_s(): has invalid NULL pointer argument : s2"
"""

__version__ = "0.1.0"

from src.constraints import (
    DEFAULT,
    abort_handler,
    get_last_error,
    ignore_handler,
    set_constraint_handler,
)
from src.core import ByteBuffer, ErrorKind, Ref, allocate_frame
from src.stdio_s import fprintf_s, gets_s, printf_s, snprintf_s, sprintf_s, sscanf_s
from src.stdlib_s import bsearch_s, getenv_s, qsort_s
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
from src.time_s import BrokenTime, asctime_s

__all__ = [
    "__version__",
    "abort_handler",
    "allocate_frame",
    "asctime_s",
    "BrokenTime",
    "bsearch_s",
    "ByteBuffer",
    "DEFAULT",
    "ErrorKind",
    "fprintf_s",
    "get_last_error",
    "getenv_s",
    "gets_s",
    "ignore_handler",
    "memcpy_s",
    "memmove_s",
    "printf_s",
    "qsort_s",
    "Ref",
    "set_constraint_handler",
    "snprintf_s",
    "sprintf_s",
    "sscanf_s",
    "strcat_s",
    "strcpy_s",
    "strerror_s",
    "strerrorlen_s",
    "strncat_s",
    "strncpy_s",
    "strnlen_s",
    "strtok_s",
]
