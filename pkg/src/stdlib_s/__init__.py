"""Constraint-checked sorting, searching and environment access."""

from src.stdlib_s.environ import EnvironmentProvider, MappingEnvironment, ProcessEnvironment, getenv_s
from src.stdlib_s.search import Comparator, bsearch_s, qsort_s

__all__ = [
    "bsearch_s",
    "Comparator",
    "EnvironmentProvider",
    "getenv_s",
    "MappingEnvironment",
    "ProcessEnvironment",
    "qsort_s",
]
