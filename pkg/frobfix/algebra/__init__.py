"""Concrete algebras given by structure constants."""

from frobfix.algebra.decompose import Decomposition, decompose, minimal_polynomial
from frobfix.algebra.frobenius import (
    check_semisimple,
    check_symmetric_frobenius,
    frobenius_ratio,
    gram_matrix,
    trace_form_matrix,
)
from frobfix.algebra.groups import group_algebra
from frobfix.algebra.structure import (
    LinearFunctional,
    StructureAlgebra,
    center_basis,
    check_axioms,
    commutator_subspace,
    left_matrix,
    matrix_algebra,
    multiply,
    tensor,
    tensor_form,
)

__all__ = [
    "Decomposition",
    "LinearFunctional",
    "StructureAlgebra",
    "center_basis",
    "check_axioms",
    "check_semisimple",
    "check_symmetric_frobenius",
    "commutator_subspace",
    "decompose",
    "frobenius_ratio",
    "gram_matrix",
    "group_algebra",
    "left_matrix",
    "matrix_algebra",
    "minimal_polynomial",
    "multiply",
    "tensor",
    "tensor_form",
    "trace_form_matrix",
]
