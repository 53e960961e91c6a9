"""
qsort_s and bsearch_s.

Both take a context-aware comparator ``compare(x, y, context) -> int`` and
work on either a ``ByteBuffer`` holding ``nmemb`` elements of ``size`` bytes
or a mutable Python sequence of ``nmemb`` elements.
"""

from functools import cmp_to_key
from typing import Any, Callable, MutableSequence, Optional, Sequence, TypeAlias, Union

from src.constraints.validator import (
    record_outcome,
    validate_not_null,
    validate_rsize_limit,
    validate_value_in_range,
)
from src.core.errors import EOK, ErrorCode
from src.core.memory import ByteBuffer
from src.core.sizes import as_size
from src.core.types import ValueRange

Comparator: TypeAlias = Callable[[Any, Any, Any], int]
ElementArray: TypeAlias = Union[ByteBuffer, MutableSequence[Any]]


def _capacity_in_elements(base: Union[ByteBuffer, Sequence[Any]], size: int) -> int:
    if isinstance(base, ByteBuffer):
        return base.capacity // size if size else 0
    return len(base)


def _elements(base: Union[ByteBuffer, Sequence[Any]], nmemb: int, size: int) -> list[Any]:
    if isinstance(base, ByteBuffer):
        return [base.read(i * size, size) for i in range(nmemb)]
    return list(base[:nmemb])


def _check(
    fn: str,
    base: Optional[Union[ByteBuffer, Sequence[Any]]],
    nmemb: int,
    size: int,
    compare: Optional[Comparator],
    key_present: bool = True,
) -> ErrorCode:
    code = EOK
    if nmemb != 0:
        code = (
            validate_not_null(fn, "key", key_present)
            or validate_not_null(fn, "base", base is not None)
            or validate_not_null(fn, "compar", compare is not None)
        )
    code = code or validate_rsize_limit(fn, "nmemb", nmemb) or validate_rsize_limit(fn, "size", size)
    if not code and nmemb != 0:
        code = validate_value_in_range(fn, "nmemb", nmemb, ValueRange(0, _capacity_in_elements(base, size)))
    return code


def qsort_s(
    base: Optional[ElementArray],
    nmemb: int,
    size: int,
    compare: Optional[Comparator],
    context: Any = None,
) -> ErrorCode:
    """Sort the first ``nmemb`` elements of ``base`` in place.

    Returns:
        0 on success, kind 1 or 6 on a violation (nothing is moved)
    """
    fn = "qsort_s"
    nmemb, size = as_size(nmemb), as_size(size)
    code = _check(fn, base, nmemb, size, compare)
    if code or nmemb == 0:
        return record_outcome(fn, code)

    ordered = sorted(_elements(base, nmemb, size), key=cmp_to_key(lambda x, y: compare(x, y, context)))
    if isinstance(base, ByteBuffer):
        base.write(0, b"".join(ordered))
    else:
        base[:nmemb] = ordered
    return record_outcome(fn, code)


def bsearch_s(
    key: Any,
    base: Optional[Union[ByteBuffer, Sequence[Any]]],
    nmemb: int,
    size: int,
    compare: Optional[Comparator],
    context: Any = None,
) -> Optional[int]:
    """Binary search for ``key`` in the sorted first ``nmemb`` elements.

    Returns:
        Index of a matching element, or None when absent or on a violation
    """
    fn = "bsearch_s"
    nmemb, size = as_size(nmemb), as_size(size)
    if _check(fn, base, nmemb, size, compare, key_present=key is not None):
        return None

    lo, hi = 0, nmemb
    while lo < hi:
        mid = (lo + hi) // 2
        element = base.read(mid * size, size) if isinstance(base, ByteBuffer) else base[mid]
        order = compare(key, element, context)
        if order == 0:
            return mid
        if order < 0:
            hi = mid
        else:
            lo = mid + 1
    return None
