"""Exact dense linear algebra over the rationals."""

from frobfix.exactlin.elimination import (
    determinant,
    image_basis,
    inverse,
    kernel_basis,
    kron,
    rank,
    rref,
    solve,
    span_basis,
)
from frobfix.exactlin.matrix import RatMatrix, block_diagonal, hstack, permutation_matrix, vstack
from frobfix.exactlin.rational import Rat, Vector, format_rat, parse_rat, to_rat, vector

__all__ = [
    "Rat",
    "RatMatrix",
    "Vector",
    "block_diagonal",
    "determinant",
    "format_rat",
    "hstack",
    "image_basis",
    "inverse",
    "kernel_basis",
    "kron",
    "parse_rat",
    "permutation_matrix",
    "rank",
    "rref",
    "solve",
    "span_basis",
    "to_rat",
    "vector",
    "vstack",
]
