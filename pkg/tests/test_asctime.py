#!/usr/bin/env python3
"""
Unit tests for asctime_s
"""

import random
import sys
import time
from dataclasses import replace
from datetime import datetime, timedelta
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.memory import ByteBuffer
from src.time_s import ASCTIME_SIZE, BrokenTime, asctime_s


@pytest.fixture
def moment() -> BrokenTime:
    return BrokenTime.from_datetime(datetime(2024, 3, 5, 7, 8, 9))


class TestAsctime:
    """Test asctime_s rendering and checks"""

    def test_render(self, moment, counting):
        buf = ByteBuffer(ASCTIME_SIZE, fill=0x23)
        assert asctime_s(buf, ASCTIME_SIZE, moment) == 0
        assert buf.raw() == b"Tue Mar  5 07:08:09 2024\n\0"

    def test_epoch(self, counting):
        buf = ByteBuffer(ASCTIME_SIZE)
        assert asctime_s(buf, ASCTIME_SIZE, BrokenTime()) == 0
        assert buf.c_str() == b"Thu Jan  1 00:00:00 1970\n"

    def test_from_datetime(self, moment):
        assert moment.wday == 2
        assert moment.mon == 2
        assert moment.year == 124
        assert moment.yday == 64

    def test_maxsize_too_small(self, moment, counting):
        buf = ByteBuffer(32, fill=0x23)
        assert asctime_s(buf, 25, moment) == 2
        assert counting.messages == ["asctime_s(): parameter out of range : maxsize"]
        assert buf[0] == 0

    def test_null_arguments(self, moment, counting):
        assert asctime_s(None, 26, moment) == 1
        assert asctime_s(ByteBuffer(26), 26, None) == 1
        assert counting.messages == [
            "asctime_s(): has invalid NULL pointer argument : s",
            "asctime_s(): has invalid NULL pointer argument : timeptr",
        ]

    def test_rsize(self, moment, counting):
        buf = ByteBuffer(26, fill=0x23)
        assert asctime_s(buf, -1, moment) == 6
        assert buf[0] == 0x23

    @pytest.mark.parametrize(
        "field, value",
        [("sec", 61), ("sec", -1), ("min", 60), ("hour", 24), ("mday", 0), ("mon", 12), ("wday", 7), ("yday", 366)],
    )
    def test_field_out_of_range(self, moment, counting, field, value):
        buf = ByteBuffer(26, fill=0x23)
        assert asctime_s(buf, 26, replace(moment, **{field: value})) == 2
        assert counting.messages == [f"asctime_s(): parameter out of range : timeptr->tm_{field}"]
        assert buf[0] == 0

    def test_leap_second_allowed(self, moment, counting):
        buf = ByteBuffer(26)
        assert asctime_s(buf, 26, replace(moment, sec=60)) == 0
        assert buf.c_str() == b"Tue Mar  5 07:08:60 2024\n"

    @pytest.mark.parametrize("year", [999, 10000])
    def test_year_must_have_four_digits(self, moment, counting, year):
        assert asctime_s(ByteBuffer(26), 26, replace(moment, year=year - 1900)) == 2
        assert counting.messages == ["asctime_s(): parameter out of range : timeptr->tm_year"]

    def test_matches_standard_asctime(self, counting):
        rng = random.Random(5)
        start = datetime(1000, 1, 1)
        span = (datetime(9999, 12, 31) - start).total_seconds()
        buf = ByteBuffer(ASCTIME_SIZE)
        for _ in range(300):
            dt = start + timedelta(seconds=rng.randrange(int(span)))
            assert asctime_s(buf, ASCTIME_SIZE, BrokenTime.from_datetime(dt)) == 0
            expected = time.asctime(dt.timetuple()).encode("ascii") + b"\n"
            assert buf.c_str() == expected


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
