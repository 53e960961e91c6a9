"""Format-string model: directive scanner, argument tags, renderer and %n/%s checks."""

from src.formatting.args import (
    ArgValue,
    Char,
    Float,
    IntSlot,
    OpaqueAddress,
    OutBuffer,
    SignedInt,
    Str,
    UnsignedInt,
    as_arg,
    as_args,
)
from src.formatting.directives import (
    FROM_ARG,
    Directive,
    FormatError,
    FormatErrorKind,
    FormatItem,
    LengthModifier,
    Literal,
    parse_directives,
)
from src.formatting.render import format_bytes, render
from src.formatting.validation import check_output_format, validate_format_n, validate_format_s

__all__ = [
    "ArgValue",
    "as_arg",
    "as_args",
    "Char",
    "check_output_format",
    "Directive",
    "Float",
    "format_bytes",
    "FormatError",
    "FormatErrorKind",
    "FormatItem",
    "FROM_ARG",
    "IntSlot",
    "LengthModifier",
    "Literal",
    "OpaqueAddress",
    "OutBuffer",
    "parse_directives",
    "render",
    "SignedInt",
    "Str",
    "UnsignedInt",
    "validate_format_n",
    "validate_format_s",
]
