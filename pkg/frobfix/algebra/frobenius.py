from fractions import Fraction
from typing import Sequence

from frobfix.algebra.structure import (
    LinearFunctional,
    StructureAlgebra,
    inverse_element,
    is_central,
    left_matrix,
    multiply,
    require_valid,
)
from frobfix.errors import DimensionMismatch, NoSolution
from frobfix.exactlin import RatMatrix, rank, solve
from frobfix.exactlin.rational import Vector
from frobfix.report import Finding, Findings


def _check_form(a: StructureAlgebra, form: LinearFunctional) -> None:
    if form.dim != a.dim:
        raise DimensionMismatch(f"form has length {form.dim}, algebra has dimension {a.dim}")


def gram_matrix(a: StructureAlgebra, form: LinearFunctional) -> RatMatrix:
    _check_form(a, form)
    n = a.dim
    return RatMatrix.from_rows([[form(a.constants[i][j]) for j in range(n)] for i in range(n)], cols=n)


def check_symmetric_frobenius(a: StructureAlgebra, form: LinearFunctional) -> Findings:
    require_valid(a)
    gram = gram_matrix(a, form)
    findings: Findings = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            if gram.get(i, j) != gram.get(j, i):
                findings.append(
                    Finding(
                        location=f"symmetry(e{i},e{j})",
                        message="form(e_i e_j) != form(e_j e_i)",
                        data={"ij": gram.get(i, j), "ji": gram.get(j, i)},
                    )
                )
    gram_rank = rank(gram)
    if gram_rank < a.dim:
        findings.append(
            Finding(
                location="nondegeneracy",
                message="the pairing (x, y) -> form(x y) is degenerate",
                data={"rank": gram_rank, "dim": a.dim},
            )
        )
    return findings


def trace_form_matrix(a: StructureAlgebra) -> RatMatrix:
    lefts = [left_matrix(a, a.basis(i)) for i in range(a.dim)]
    n = a.dim
    return RatMatrix.from_rows([[(lefts[i] @ lefts[j]).trace() for j in range(n)] for i in range(n)], cols=n)


def check_semisimple(a: StructureAlgebra) -> bool:
    # Nondegenerate trace form <=> semisimple, valid in characteristic 0.
    require_valid(a)
    return rank(trace_form_matrix(a)) == a.dim


def frobenius_ratio(a: StructureAlgebra, form: LinearFunctional, other: LinearFunctional) -> Vector:
    """Central unit z with other(x) = form(z x) for every x."""
    for name, f in (("form", form), ("other", other)):
        if check_symmetric_frobenius(a, f):
            raise NoSolution(f"{name} is not a symmetric Frobenius form")
    # form(z e_j) = sum_i z_i G[i][j], so G^T z = other.
    z = solve(gram_matrix(a, form).transpose(), RatMatrix.column(other.coefficients)).entries
    if not is_central(a, z):
        raise NoSolution("the ratio of the two forms is not central")
    if inverse_element(a, z) is None:
        raise NoSolution("the ratio of the two forms is not invertible")
    return z


def vanishes_on(form: LinearFunctional, vectors: Sequence[Sequence[Fraction]]) -> bool:
    return all(form(v) == 0 for v in vectors)


def twisted_form(a: StructureAlgebra, form: LinearFunctional, z: Sequence[Fraction]) -> LinearFunctional:
    return LinearFunctional(tuple(form(multiply(a, z, a.basis(j))) for j in range(a.dim)))
