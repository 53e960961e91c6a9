"""Byte buffers with identity, the memory model behind every bounded operation.

A ``ByteBuffer`` is a pointer into a shared ``bytearray`` storage: it has an
address in a modelled address space (used only for overlap checks), a start
offset and an end bound. Pointer arithmetic yields new views over the same
storage, so ``buf - 10`` can reach into an adjacent buffer carved from the
same frame, as happens with adjacent automatic arrays in C.
"""

import threading
from typing import Optional, TypeAlias, Union

from src.core.sizes import SIZE_MAX
from src.core.types import MemRegion

# Distinct storages are placed at least this far apart in the address space.
_GUARD_GAP = 4096
_FIRST_ADDRESS = 0x1000_0000


class _AddressAllocator:
    """Hands out non-overlapping base addresses for new storages."""

    def __init__(self, first: int = _FIRST_ADDRESS):
        self._next = first
        self._lock = threading.Lock()

    def allocate(self, size: int) -> int:
        with self._lock:
            base = self._next
            self._next = (base + size + _GUARD_GAP + 15) & ~15
            if self._next > SIZE_MAX:
                raise MemoryError("modelled address space exhausted")
            return base


_allocator = _AddressAllocator()


class ByteBuffer:
    """Mutable byte storage with a modelled address.

    Args:
        size: Capacity in bytes, or initial contents
        fill: Byte value used for the initial contents when ``size`` is an int

    Example:
        >>> buf = ByteBuffer(16)
        >>> buf.write(0, b"abc\\0")
        >>> buf.c_str()
        b'abc'
    """

    __slots__ = ("_storage", "_start", "_end", "_base")

    def __init__(self, size: Union[int, bytes], fill: int = 0):
        if isinstance(size, int):
            if size < 0:
                raise ValueError(f"buffer size must be non-negative, got {size}")
            storage = bytearray([fill]) * size
        else:
            storage = bytearray(size)
        self._storage = storage
        self._start = 0
        self._end = len(storage)
        self._base = _allocator.allocate(len(storage))

    @classmethod
    def _view(cls, storage: bytearray, base: int, start: int, end: int) -> "ByteBuffer":
        view = cls.__new__(cls)
        view._storage = storage
        view._base = base
        view._start = start
        view._end = end
        return view

    @classmethod
    def from_bytes(cls, data: bytes, capacity: Optional[int] = None, terminate: bool = True) -> "ByteBuffer":
        """Create a buffer holding ``data`` (plus a terminator) with room for ``capacity`` bytes."""
        payload = bytes(data) + (b"\0" if terminate else b"")
        size = len(payload) if capacity is None else capacity
        if size < len(payload):
            raise ValueError(f"capacity {size} too small for {len(payload)} bytes")
        buf = cls(size)
        buf._storage[: len(payload)] = payload
        return buf

    # Pointer model

    @property
    def address(self) -> int:
        return self._base + self._start

    @property
    def capacity(self) -> int:
        """Bytes physically reachable from this pointer."""
        return self._end - self._start

    def __len__(self) -> int:
        return self.capacity

    def __add__(self, delta: int) -> "ByteBuffer":
        start = self._start + delta
        if start < 0 or start > len(self._storage):
            raise ValueError(f"pointer arithmetic leaves the storage (offset {start})")
        return ByteBuffer._view(self._storage, self._base, start, max(self._end, start))

    def __sub__(self, delta: int) -> "ByteBuffer":
        return self + (-delta)

    def same_storage(self, other: "ByteBuffer") -> bool:
        return self._storage is other._storage

    def region(self, length: int) -> MemRegion:
        return MemRegion(self.address, length)

    # Byte access, relative to this pointer

    def _check(self, start: int, count: int) -> None:
        if start < 0 or count < 0 or start + count > self.capacity:
            raise IndexError(f"access [{start}, {start + count}) outside buffer of {self.capacity} bytes")

    def __getitem__(self, index: Union[int, slice]) -> Union[int, bytes]:
        if isinstance(index, slice):
            start, stop, step = index.indices(self.capacity)
            return bytes(self._storage[self._start + start : self._start + stop : step])
        if index < 0:
            index += self.capacity
        self._check(index, 1)
        return self._storage[self._start + index]

    def __setitem__(self, index: int, value: int) -> None:
        self._check(index, 1)
        self._storage[self._start + index] = value

    def read(self, start: int, count: int) -> bytes:
        self._check(start, count)
        return bytes(self._storage[self._start + start : self._start + start + count])

    def write(self, start: int, data: bytes) -> None:
        self._check(start, len(data))
        self._storage[self._start + start : self._start + start + len(data)] = data

    def fill(self, value: int, count: int) -> None:
        self._check(0, count)
        self._storage[self._start : self._start + count] = bytes([value]) * count

    def c_str(self) -> bytes:
        """Bytes up to the first terminator (or the physical end)."""
        window = self._storage[self._start : self._end]
        nul = window.find(0)
        return bytes(window if nul < 0 else window[:nul])

    def raw(self) -> bytes:
        return bytes(self._storage[self._start : self._end])

    def __repr__(self) -> str:
        return f"ByteBuffer(address={self.address:#x}, capacity={self.capacity})"


def allocate_frame(*sizes: int, fill: int = 0) -> tuple[ByteBuffer, ...]:
    """Carve adjacent buffers out of one storage, lowest address first.

    Each buffer's capacity is its own size; pointer arithmetic on one of them
    may step into its neighbours.
    """
    total = sum(sizes)
    frame = ByteBuffer(total, fill=fill)
    buffers = []
    offset = 0
    for size in sizes:
        buffers.append(ByteBuffer._view(frame._storage, frame._base, offset, offset + size))
        offset += size
    return tuple(buffers)


# A C string argument: immutable bytes (end of data acts as terminator) or a buffer.
CString: TypeAlias = Union[bytes, ByteBuffer]


def readable_length(obj: CString) -> int:
    return obj.capacity if isinstance(obj, ByteBuffer) else len(obj)


def read_bytes(obj: CString, start: int, count: int) -> bytes:
    if isinstance(obj, ByteBuffer):
        return obj.read(start, count)
    return bytes(obj[start : start + count])


def bounded_strlen(obj: Optional[CString], limit: int) -> int:
    """Bytes before the first terminator, scanning at most ``limit`` readable bytes."""
    if obj is None:
        return 0
    count = min(limit, readable_length(obj))
    window = read_bytes(obj, 0, count)
    nul = window.find(0)
    return count if nul < 0 else nul


def region_of(obj: CString, length: int) -> Optional[MemRegion]:
    """Region occupied by ``obj``; immutable bytes live outside the modelled space."""
    if isinstance(obj, ByteBuffer):
        return obj.region(length)
    return None
