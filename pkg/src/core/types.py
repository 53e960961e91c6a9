"""Value types shared by every module: ranges, memory regions, violation records."""

from dataclasses import dataclass, field
from typing import Generic, Optional, TypeVar

from src.core.errors import ErrorKind
from src.core.sizes import SIZE_MAX

T = TypeVar("T")


@dataclass(frozen=True)
class ValueRange:
    """Inclusive range for a domain value."""

    min: int
    max: int

    def __post_init__(self):
        if self.min < 0 or self.max < 0:
            raise ValueError("range bounds must be unsigned sizes")
        if self.min > self.max:
            raise ValueError(f"invalid range: min {self.min} > max {self.max}")

    def __contains__(self, value: int) -> bool:
        return self.min <= value <= self.max


@dataclass(frozen=True)
class MemRegion:
    """Half-open interval [base, base + length) of the modelled address space.

    The base is an integer derived from a buffer's identity; nothing ever
    dereferences it.
    """

    base: int
    length: int

    def __post_init__(self):
        if self.base < 0 or self.length < 0:
            raise ValueError("region base and length must be unsigned")
        if self.base + self.length > SIZE_MAX + 1:
            raise ValueError(f"region wraps the address space: base={self.base:#x} length={self.length}")

    @property
    def end(self) -> int:
        return self.base + self.length


def regions_overlap(a: MemRegion, b: MemRegion) -> bool:
    """True iff the two intervals share at least one address.

    Argument order is irrelevant: the lower region is figured out here.
    Empty regions never overlap anything.
    """
    if a.length == 0 or b.length == 0:
        return False
    lower, upper = (a, b) if a.base <= b.base else (b, a)
    return upper.base < lower.end


@dataclass(frozen=True)
class Violation:
    """Diagnostic record for one runtime-constraint check.

    ``detail`` holds the offending value or directive rendered at validation
    time; no reference to caller memory is retained.
    """

    kind: ErrorKind
    function_name: str = ""
    param_name: str = ""
    pair_param_name: Optional[str] = None
    detail: Optional[str] = None
    error_present: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", ErrorKind(self.kind))
        object.__setattr__(self, "error_present", self.kind != ErrorKind.NOERROR)
        if self.error_present and not (self.function_name and self.param_name):
            raise ValueError("a violation needs both a function name and a parameter name")

    @property
    def code(self) -> int:
        return int(self.kind)

    @property
    def params(self) -> str:
        """Parameter clause as it appears in diagnostics."""
        if self.pair_param_name:
            return f"{self.param_name} and {self.pair_param_name}"
        return self.param_name


@dataclass
class Ref(Generic[T]):
    """Mutable cell standing in for a C in-out pointer argument (``rsize_t *``, ``char **``)."""

    value: T
