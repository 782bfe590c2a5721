"""Build 2D-discrete-Brouwer and Sperner instances from QBF formulas and follow their paths."""

from ._core import (
    BrouwerInstance,
    DomainError,
    Formula,
    InvalidArgument,
    LayoutParams,
    MalformedInstance,
    ParseError,
    Quantifier,
    SpernerInstance,
    brouwer_from_rows,
    build,
    check_routing,
    descriptor_json,
    load,
    terminals,
)

__all__ = [
    "BrouwerInstance",
    "DomainError",
    "Formula",
    "InvalidArgument",
    "LayoutParams",
    "MalformedInstance",
    "ParseError",
    "Quantifier",
    "SpernerInstance",
    "brouwer_from_rows",
    "build",
    "check_routing",
    "descriptor_json",
    "load",
    "terminals",
]
