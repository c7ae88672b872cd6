"""Exact rational linear algebra with a compiled integer core."""
from ._backend import BACKEND
from .linalg import (
    IncrementalSpan,
    charpoly,
    eigenspace,
    inverse,
    kernel_basis,
    kernel_matrix,
    path_order,
    rank,
    rational_roots,
    row_echelon,
    solve,
)
from .matrix import Matrix, anticommutator, commutator
from .rational import Rational, as_rational, format_rational, parse_rational

__all__ = [
    "BACKEND",
    "IncrementalSpan",
    "Matrix",
    "Rational",
    "anticommutator",
    "as_rational",
    "charpoly",
    "commutator",
    "eigenspace",
    "format_rational",
    "inverse",
    "kernel_basis",
    "kernel_matrix",
    "parse_rational",
    "path_order",
    "rank",
    "rational_roots",
    "row_echelon",
    "solve",
]
