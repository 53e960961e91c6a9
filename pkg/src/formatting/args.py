"""Tagged argument values: the Python stand-in for a C variadic argument list."""

from dataclasses import dataclass
from typing import Optional, TypeAlias, Union

from src.core.memory import ByteBuffer
from src.core.sizes import RSIZE_MAX


@dataclass(frozen=True)
class SignedInt:
    value: int


@dataclass(frozen=True)
class UnsignedInt:
    value: int


@dataclass(frozen=True)
class Float:
    value: float


@dataclass(frozen=True)
class Char:
    """A single byte; ``int`` or one-byte ``bytes``."""

    value: Union[int, bytes]

    @property
    def byte(self) -> int:
        if isinstance(self.value, int):
            return self.value & 0xFF
        if len(self.value) != 1:
            raise ValueError(f"Char needs exactly one byte, got {self.value!r}")
        return self.value[0]


@dataclass(frozen=True)
class Str:
    """A C string argument; ``None`` models a null pointer."""

    value: Optional[bytes]

    @property
    def present(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class OutBuffer:
    """Destination for %s / %c scan conversions, with its declared capacity."""

    buffer: ByteBuffer
    capacity: int

    def __post_init__(self):
        if not 0 <= self.capacity <= RSIZE_MAX:
            raise ValueError(f"OutBuffer capacity {self.capacity} outside [0, RSIZE_MAX]")


@dataclass
class IntSlot:
    """Mutable integer target (%n in unchecked rendering, integer scan conversions)."""

    value: int = 0


@dataclass(frozen=True)
class OpaqueAddress:
    """A pointer value for %p."""

    address: int


ArgValue: TypeAlias = Union[SignedInt, UnsignedInt, Float, Char, Str, OutBuffer, IntSlot, OpaqueAddress]


def as_arg(value: object) -> ArgValue:
    """Wrap a plain Python value in the matching tag (already-tagged values pass through)."""
    if isinstance(value, (SignedInt, UnsignedInt, Float, Char, Str, OutBuffer, IntSlot, OpaqueAddress)):
        return value
    if value is None:
        return Str(None)
    if isinstance(value, bool):
        return SignedInt(int(value))
    if isinstance(value, int):
        return SignedInt(value)
    if isinstance(value, float):
        return Float(value)
    if isinstance(value, (bytes, bytearray)):
        return Str(bytes(value))
    if isinstance(value, str):
        return Str(value.encode("latin-1"))
    if isinstance(value, ByteBuffer):
        return Str(value.c_str())
    raise TypeError(f"cannot pass {type(value).__name__} as a format argument")


def as_args(values: tuple[object, ...] | list[object]) -> list[ArgValue]:
    return [as_arg(v) for v in values]
