from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from frobfix.errors import DimensionMismatch, InvalidAlgebra, NoSolution
from frobfix.exactlin import RatMatrix, kernel_basis, kron, solve, span_basis, vstack
from frobfix.exactlin.rational import RatLike, Vector, basis_vector, dot, to_rat, vector
from frobfix.report import Finding, Findings

Constants = Tuple[Tuple[Tuple[Fraction, ...], ...], ...]


@dataclass(frozen=True)
class StructureAlgebra:
    """Finite-dimensional Q-algebra; constants[i][j][k] is the e_k-coefficient of e_i e_j."""

    dim: int
    constants: Constants
    unit: Vector

    def __post_init__(self) -> None:
        n = self.dim
        consts = tuple(tuple(tuple(to_rat(v) for v in cell) for cell in row) for row in self.constants)
        if len(consts) != n or any(len(row) != n or any(len(cell) != n for cell in row) for row in consts):
            raise DimensionMismatch(f"structure constants must be {n}x{n}x{n}")
        if len(self.unit) != n:
            raise DimensionMismatch(f"unit has length {len(self.unit)}, expected {n}")
        object.__setattr__(self, "constants", consts)
        object.__setattr__(self, "unit", vector(self.unit))

    def basis(self, i: int) -> Vector:
        return basis_vector(self.dim, i)


@dataclass(frozen=True)
class LinearFunctional:
    coefficients: Vector

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", vector(self.coefficients))

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        if len(x) != self.dim:
            raise DimensionMismatch(f"functional of length {self.dim} applied to a vector of length {len(x)}")
        return dot(self.coefficients, x)

    def scaled(self, s: RatLike) -> "LinearFunctional":
        s = to_rat(s)
        return LinearFunctional(tuple(s * c for c in self.coefficients))


def _check_vector(a: StructureAlgebra, x: Sequence[Fraction], name: str) -> None:
    if len(x) != a.dim:
        raise DimensionMismatch(f"{name} has length {len(x)}, algebra has dimension {a.dim}")


def multiply(a: StructureAlgebra, x: Sequence[RatLike], y: Sequence[RatLike]) -> Vector:
    _check_vector(a, x, "x")
    _check_vector(a, y, "y")
    x, y = vector(x), vector(y)
    out = [Fraction(0)] * a.dim
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = a.constants[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            s = xi * yj
            for k, c in enumerate(row[j]):
                if c:
                    out[k] += s * c
    return tuple(out)


def left_matrix(a: StructureAlgebra, x: Sequence[RatLike]) -> RatMatrix:
    return RatMatrix.from_columns([multiply(a, x, a.basis(j)) for j in range(a.dim)], rows=a.dim)


def right_matrix(a: StructureAlgebra, x: Sequence[RatLike]) -> RatMatrix:
    return RatMatrix.from_columns([multiply(a, a.basis(j), x) for j in range(a.dim)], rows=a.dim)


@lru_cache(maxsize=64)
def _axiom_findings(a: StructureAlgebra) -> Tuple[Finding, ...]:
    findings: Findings = []
    n = a.dim
    products = [[a.constants[i][j] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = multiply(a, products[i][j], a.basis(k))
                right = multiply(a, a.basis(i), products[j][k])
                if left != right:
                    findings.append(
                        Finding(
                            location=f"assoc(e{i},e{j},e{k})",
                            message="(e_i e_j) e_k != e_i (e_j e_k)",
                            data={"left": list(left), "right": list(right)},
                        )
                    )
    for i in range(n):
        e = a.basis(i)
        if multiply(a, a.unit, e) != e:
            findings.append(Finding(location=f"unit.left(e{i})", message="1 e_i != e_i"))
        if multiply(a, e, a.unit) != e:
            findings.append(Finding(location=f"unit.right(e{i})", message="e_i 1 != e_i"))
    return tuple(findings)


def check_axioms(a: StructureAlgebra) -> Findings:
    return list(_axiom_findings(a))


def require_valid(a: StructureAlgebra) -> None:
    findings = _axiom_findings(a)
    if findings:
        raise InvalidAlgebra(f"algebra axioms fail at {', '.join(f.location for f in findings[:5])}")


def center_basis(a: StructureAlgebra) -> List[Vector]:
    require_valid(a)
    blocks = [right_matrix(a, a.basis(j)) - left_matrix(a, a.basis(j)) for j in range(a.dim)]
    return [v.entries for v in kernel_basis(vstack(*blocks))]


def commutator_subspace(a: StructureAlgebra) -> List[Vector]:
    require_valid(a)
    n = a.dim
    commutators = [
        tuple(p - q for p, q in zip(a.constants[i][j], a.constants[j][i]))
        for i in range(n)
        for j in range(i + 1, n)
    ]
    return span_basis([c for c in commutators if any(c)], n)


def is_central(a: StructureAlgebra, z: Sequence[RatLike]) -> bool:
    return all(multiply(a, z, a.basis(j)) == multiply(a, a.basis(j), z) for j in range(a.dim))


def inverse_element(a: StructureAlgebra, z: Sequence[RatLike]) -> Optional[Vector]:
    try:
        w = solve(left_matrix(a, z), RatMatrix.column(a.unit)).entries
    except NoSolution:
        return None
    return w


def is_invertible(a: StructureAlgebra, z: Sequence[RatLike]) -> bool:
    return inverse_element(a, z) is not None


def matrix_algebra(
    dims: Sequence[int], lambdas: Optional[Sequence[RatLike]] = None
) -> Tuple[StructureAlgebra, LinearFunctional]:
    """M_{d_1}(Q) + ... + M_{d_r}(Q) in the matrix-unit basis, with the form sum lambda_i tr."""
    lambdas = [to_rat(v) for v in (lambdas if lambdas is not None else [1] * len(dims))]
    if len(lambdas) != len(dims):
        raise DimensionMismatch(f"{len(lambdas)} scalars for {len(dims)} blocks")
    units = []
    for t, d in enumerate(dims):
        units.extend((t, p, q) for p in range(d) for q in range(d))
    n = len(units)
    index = {u: k for k, u in enumerate(units)}
    zero = tuple(Fraction(0) for _ in range(n))
    constants = []
    for (t, p, q) in units:
        row = []
        for (s, u, v) in units:
            if s == t and q == u:
                row.append(basis_vector(n, index[(t, p, v)]))
            else:
                row.append(zero)
        constants.append(tuple(row))
    unit = tuple(Fraction(1 if p == q else 0) for (_, p, q) in units)
    form = tuple(lambdas[t] if p == q else Fraction(0) for (t, p, q) in units)
    return StructureAlgebra(n, tuple(constants), unit), LinearFunctional(form)


def tensor(a: StructureAlgebra, b: StructureAlgebra) -> StructureAlgebra:
    """A (x) B over Q; e_i (x) f_k is basis vector i * b.dim + k."""
    n = a.dim * b.dim
    # kron(L_{e_i}, L_{f_k}) is left multiplication by e_i (x) f_k.
    lefts = [
        kron(left_matrix(a, a.basis(i)), left_matrix(b, b.basis(k))) for i in range(a.dim) for k in range(b.dim)
    ]
    constants = tuple(tuple(lefts[x].col(y) for y in range(n)) for x in range(n))
    unit = kron(RatMatrix.column(a.unit), RatMatrix.column(b.unit)).entries
    return StructureAlgebra(n, constants, unit)


def tensor_form(form: LinearFunctional, other: LinearFunctional) -> LinearFunctional:
    row = kron(RatMatrix.from_rows([form.coefficients]), RatMatrix.from_rows([other.coefficients]))
    return LinearFunctional(row.entries)
