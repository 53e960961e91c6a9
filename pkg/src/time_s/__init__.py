"""Fixed-format time rendering."""

from src.time_s.asctime import ASCTIME_SIZE, BrokenTime, asctime_s

__all__ = ["asctime_s", "ASCTIME_SIZE", "BrokenTime"]
