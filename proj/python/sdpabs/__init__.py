"""Predicate abstraction with symbolic decision procedures."""

from ._sdpabs import (
    CapExceeded,
    Error,
    ParseError,
    UnsupportedAtom,
    abstract,
    brute_force,
    check,
    diamond,
)

__all__ = [
    "CapExceeded",
    "Error",
    "ParseError",
    "UnsupportedAtom",
    "abstract",
    "brute_force",
    "check",
    "diamond",
]
