"""Permutation pairs, reroute surgery and conjugation by transpositions."""

from ._core import (
    DegenerateError,
    DessinError,
    DomainError,
    Pair,
    ParseError,
    StructuralError,
    verify,
    verify_tree_case,
)

__all__ = [
    "DegenerateError",
    "DessinError",
    "DomainError",
    "Pair",
    "ParseError",
    "StructuralError",
    "verify",
    "verify_tree_case",
]
