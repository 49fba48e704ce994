"""Exact characters, residues and reductions on GKM graphs."""

from ._core import (
    GkmError,
    Graph,
    InvalidAction,
    InvalidClass,
    LaurentPoly,
    NotGeneric,
    NotPrimitive,
    NotRegular,
    ParseError,
    ZeroNotRegular,
    selftest,
)

__all__ = [
    "GkmError",
    "Graph",
    "InvalidAction",
    "InvalidClass",
    "LaurentPoly",
    "NotGeneric",
    "NotPrimitive",
    "NotRegular",
    "ParseError",
    "ZeroNotRegular",
    "selftest",
]
