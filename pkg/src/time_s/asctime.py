"""asctime_s: fixed 25-byte rendering of a broken-down time."""

from dataclasses import dataclass, fields
from datetime import datetime
from typing import Optional

from src.constraints.validator import (
    record_outcome,
    validate_not_null,
    validate_rsize_limit,
    validate_value_in_range,
)
from src.core.errors import ErrorCode
from src.core.memory import ByteBuffer
from src.core.sizes import RSIZE_MAX, as_size
from src.core.types import ValueRange
from src.formatting.args import SignedInt, Str
from src.formatting.render import format_bytes
from src.string_s.common import check_capacity, terminate_on_failure

ASCTIME_SIZE = 26

_DAYS = (b"Sun", b"Mon", b"Tue", b"Wed", b"Thu", b"Fri", b"Sat")
_MONTHS = (b"Jan", b"Feb", b"Mar", b"Apr", b"May", b"Jun", b"Jul", b"Aug", b"Sep", b"Oct", b"Nov", b"Dec")

_ASCTIME_FORMAT = b"%.3s %.3s%3d %.2d:%.2d:%.2d %d\n"


@dataclass(frozen=True)
class BrokenTime:
    """Broken-down calendar time, fields as in ``struct tm``.

    ``year`` counts years since 1900, ``mon`` is 0-based, ``wday`` 0 is Sunday.
    """

    sec: int = 0
    min: int = 0
    hour: int = 0
    mday: int = 1
    mon: int = 0
    year: int = 70
    wday: int = 4
    yday: int = 0

    @classmethod
    def from_datetime(cls, dt: datetime) -> "BrokenTime":
        timetuple = dt.timetuple()
        return cls(
            sec=dt.second,
            min=dt.minute,
            hour=dt.hour,
            mday=dt.day,
            mon=dt.month - 1,
            year=dt.year - 1900,
            wday=(dt.weekday() + 1) % 7,
            yday=timetuple.tm_yday - 1,
        )

    @property
    def calendar_year(self) -> int:
        return self.year + 1900


FIELD_RANGES: dict[str, tuple[int, int]] = {
    "sec": (0, 60),
    "min": (0, 59),
    "hour": (0, 23),
    "mday": (1, 31),
    "mon": (0, 11),
    "wday": (0, 6),
    "yday": (0, 365),
}

# Four-digit years only
CALENDAR_YEARS = (1000, 9999)


def invalid_field(t: BrokenTime) -> Optional[str]:
    """Name of the first field outside its range, or None."""
    for f in fields(t):
        if f.name in FIELD_RANGES:
            low, high = FIELD_RANGES[f.name]
            if not low <= getattr(t, f.name) <= high:
                return f.name
    low, high = CALENDAR_YEARS
    if not low <= t.calendar_year <= high:
        return "year"
    return None


def asctime_s(s: Optional[ByteBuffer], maxsize: int, timeptr: Optional[BrokenTime]) -> ErrorCode:
    """Write "Www Mmm dd hh:mm:ss yyyy\\n" plus terminator into ``s``.

    Returns:
        0 on success; kind 1, 2 or 6 on a violation, with ``s[0]`` cleared
    """
    fn = "asctime_s"
    maxsize = as_size(maxsize)
    code = (
        validate_not_null(fn, "s", s is not None)
        or validate_not_null(fn, "timeptr", timeptr is not None)
        or validate_rsize_limit(fn, "maxsize", maxsize)
        or validate_value_in_range(fn, "maxsize", maxsize, ValueRange(ASCTIME_SIZE, RSIZE_MAX))
        or check_capacity(fn, "maxsize", maxsize, s)
    )
    if not code:
        bad = invalid_field(timeptr)
        if bad is not None:
            value = timeptr.calendar_year if bad == "year" else getattr(timeptr, bad)
            low, high = CALENDAR_YEARS if bad == "year" else FIELD_RANGES[bad]
            code = validate_value_in_range(fn, f"timeptr->tm_{bad}", value, ValueRange(low, high))
    if code:
        terminate_on_failure(s, maxsize)
        return code

    text = format_bytes(
        _ASCTIME_FORMAT,
        Str(_DAYS[timeptr.wday]),
        Str(_MONTHS[timeptr.mon]),
        SignedInt(timeptr.mday),
        SignedInt(timeptr.hour),
        SignedInt(timeptr.min),
        SignedInt(timeptr.sec),
        SignedInt(timeptr.calendar_year),
    )
    s.write(0, text + b"\0")
    return record_outcome(fn, code)
