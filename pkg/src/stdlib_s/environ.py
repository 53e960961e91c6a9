"""
getenv_s with an injectable environment.

"Not found" and "value too long" are ordinary non-zero returns, not
runtime-constraint violations: the handler is not invoked for them.
"""

import os
from typing import Mapping, Optional, Protocol, Union

from src.constraints.validator import (
    record_outcome,
    validate_not_null,
    validate_not_zero,
    validate_rsize_limit,
)
from src.core.errors import EOK, ErrorCode, ErrorKind
from src.core.memory import ByteBuffer
from src.core.sizes import as_size
from src.core.types import Ref
from src.string_s.common import check_capacity, terminate_on_failure


class EnvironmentProvider(Protocol):
    def get(self, name: str) -> Optional[str]: ...


class MappingEnvironment:
    """Environment backed by a plain mapping."""

    def __init__(self, values: Mapping[str, str]):
        self._values = dict(values)

    def get(self, name: str) -> Optional[str]:
        return self._values.get(name)


class ProcessEnvironment(MappingEnvironment):
    """Snapshot of the process environment taken at construction."""

    def __init__(self):
        super().__init__(os.environ)


def getenv_s(
    len_out: Optional[Ref[int]],
    value: Optional[ByteBuffer],
    maxsize: int,
    name: Union[bytes, str, None],
    env: Optional[EnvironmentProvider] = None,
) -> ErrorCode:
    """Look up ``name`` and copy its value into ``value``.

    Args:
        len_out: Receives the value's length (0 when not found)
        value: Destination, may be None to query the length only
        maxsize: Declared capacity of ``value``
        name: Variable name
        env: Environment to search (process snapshot by default)

    Returns:
        0 when found and stored, 3 when not found, 2 when ``value`` is too
        small, or a violation code
    """
    fn = "getenv_s"
    maxsize = as_size(maxsize)
    code = validate_not_null(fn, "name", name is not None) or validate_rsize_limit(fn, "maxsize", maxsize)
    if not code and value is not None:
        code = validate_not_zero(fn, "maxsize", maxsize) or check_capacity(fn, "maxsize", maxsize, value)
    if code:
        if len_out is not None:
            len_out.value = 0
        terminate_on_failure(value, maxsize)
        return code

    key = name.decode("latin-1") if isinstance(name, bytes) else name
    found = (env if env is not None else ProcessEnvironment()).get(key)
    if found is None:
        if len_out is not None:
            len_out.value = 0
        terminate_on_failure(value, maxsize)
        return record_outcome(fn, int(ErrorKind.ENVIRONMENTAL_LIMIT_NOT_MET), name=key)

    data = found.encode("latin-1", errors="replace")
    if len_out is not None:
        len_out.value = len(data)
    if value is None or len(data) >= maxsize:
        terminate_on_failure(value, maxsize)
        return record_outcome(fn, int(ErrorKind.PARAMETER_OUT_OF_RANGE), name=key, length=len(data))

    value.write(0, data + b"\0")
    return record_outcome(fn, EOK)
