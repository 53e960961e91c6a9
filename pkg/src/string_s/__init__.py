"""Bounds-checked string and memory functions."""

from src.string_s.copy import strcat_s, strcpy_s, strncat_s, strncpy_s
from src.string_s.length import strerror_s, strerrorlen_s, strnlen_s
from src.string_s.memory import memcpy_s, memmove_s
from src.string_s.tokenize import strtok_s

__all__ = [
    "memcpy_s",
    "memmove_s",
    "strcat_s",
    "strcpy_s",
    "strerror_s",
    "strerrorlen_s",
    "strncat_s",
    "strncpy_s",
    "strnlen_s",
    "strtok_s",
]
