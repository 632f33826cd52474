"""Wedderburn decomposition of a split semisimple algebra into its skeleton.

Central primitive idempotents come from one random central element z: when
the minimal polynomial of z has r distinct rational roots mu_1..mu_r, the
Lagrange polynomials prod_{j != i} (z - mu_j) / (mu_i - mu_j) evaluated at z
are exactly the block identities.
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from frobfix.algebra.frobenius import check_semisimple, check_symmetric_frobenius
from frobfix.algebra.structure import (
    LinearFunctional,
    StructureAlgebra,
    center_basis,
    left_matrix,
    multiply,
    require_valid,
)
from frobfix.errors import DegenerateSample, NoSolution, NotFrobenius, NotSemisimple, NotSplit
from frobfix.exactlin import RatMatrix, rank, solve
from frobfix.exactlin.rational import RatLike, Vector, add_vectors, scale_vector, vector, zero_vector
from frobfix.skeletal.types import FrobeniusAlgebra, SemisimpleSkeleton

logger = logging.getLogger(__name__)

DEFAULT_MAX_RETRIES = 16
DEFAULT_COEFFICIENT_BOUND = 5


@dataclass(frozen=True)
class Decomposition:
    skeleton: SemisimpleSkeleton
    idempotents: Tuple[Vector, ...]
    block_order: Dict[int, int]


def minimal_polynomial(
    a: StructureAlgebra, z: Sequence[Fraction], unit: Optional[Sequence[RatLike]] = None
) -> List[Fraction]:
    """Monic minimal polynomial of z, coefficients from the constant term up.

    With unit = f the polynomial is taken in the corner algebra fAf, which
    must contain z.
    """
    powers = [a.unit if unit is None else vector(unit)]
    while True:
        nxt = multiply(a, z, powers[-1])
        try:
            coeffs = solve(RatMatrix.from_columns(powers), RatMatrix.column(nxt)).entries
        except NoSolution:
            powers.append(nxt)
            continue
        return [-c for c in coeffs] + [Fraction(1)]


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def rational_roots(coeffs: Sequence[Fraction]) -> List[Fraction]:
    """Roots of a squarefree polynomial that splits over Q; NotSplit / NotSemisimple otherwise."""
    x = sympy.Symbol("x")
    poly = sympy.Poly([_to_sympy(c) for c in reversed(coeffs)], x, domain=sympy.QQ)
    _, factors = poly.factor_list()
    roots = []
    for factor, multiplicity in factors:
        if multiplicity > 1:
            raise NotSemisimple(f"minimal polynomial has the repeated factor {factor.as_expr()}")
        if factor.degree() > 1:
            raise NotSplit(f"minimal polynomial has the irreducible factor {factor.as_expr()} over Q")
        lead, const = factor.all_coeffs()
        roots.append(-_from_sympy(const) / _from_sympy(lead))
    return sorted(roots)


def _polynomial_at(a: StructureAlgebra, z: Vector, roots: Sequence[Fraction], skip: int) -> Vector:
    value = a.unit
    mu = roots[skip]
    for j, nu in enumerate(roots):
        if j == skip:
            continue
        shifted = add_vectors(z, scale_vector(-nu, a.unit))
        value = scale_vector(1 / (mu - nu), multiply(a, shifted, value))
    return value


def central_idempotents(a: StructureAlgebra, z: Vector, r: int) -> List[Vector]:
    roots = rational_roots(minimal_polynomial(a, z))
    if len(roots) < r:
        raise DegenerateSample(f"sample separates {len(roots)} of {r} blocks")
    return [_polynomial_at(a, z, roots, i) for i in range(len(roots))]


def _evaluate(a: StructureAlgebra, coeffs: Sequence[Fraction], z: Vector, unit: Vector) -> Vector:
    value = scale_vector(coeffs[-1], unit)
    for c in reversed(coeffs[:-1]):
        value = add_vectors(multiply(a, z, value), scale_vector(c, unit))
    return value


def _splitting_idempotent(a: StructureAlgebra, z: Vector, unit: Vector) -> Optional[Vector]:
    """Idempotent g of the corner with 0 != g != unit cut out by a simple rational root of z."""
    coeffs = minimal_polynomial(a, z, unit)
    if len(coeffs) < 3:
        return None
    x = sympy.Symbol("x")
    poly = sympy.Poly([_to_sympy(c) for c in reversed(coeffs)], x, domain=sympy.QQ)
    _, factors = poly.factor_list()
    for factor, multiplicity in factors:
        if multiplicity != 1 or factor.degree() != 1:
            continue
        lead, const = factor.all_coeffs()
        mu = -const / lead
        cofactor = sympy.quo(poly, factor)
        q = [_from_sympy(c) for c in reversed(cofactor.all_coeffs())]
        return scale_vector(1 / _from_sympy(cofactor.eval(mu)), _evaluate(a, q, z, unit))
    return None


def _sample_corner(rng: random.Random, a: StructureAlgebra, f: Vector) -> Vector:
    y = tuple(Fraction(rng.choice((-1, 0, 0, 1))) for _ in range(a.dim))
    return multiply(a, multiply(a, f, y), f)


def _require_split_block(
    a: StructureAlgebra, e: Vector, d: int, rng: random.Random, attempts: int
) -> None:
    # Among d^2-dimensional central simple blocks only M_d(Q) has an idempotent f with dim fA = d.
    f, size = e, d * d
    for _ in range(attempts):
        if size == d:
            return
        g = _splitting_idempotent(a, _sample_corner(rng, a, f), f)
        if g is None:
            continue
        h = add_vectors(f, scale_vector(-1, g))
        size, f = min((rank(left_matrix(a, g)), g), (rank(left_matrix(a, h)), h))
    if size != d:
        raise NotSplit(
            f"block of dimension {d * d} has no right ideal of dimension {d} "
            f"after {attempts} samples, so it is not M_{d}(Q)"
        )


def _sample_central(rng: random.Random, center: Sequence[Vector], dim: int, bound: int) -> Vector:
    z = zero_vector(dim)
    for basis in center:
        z = add_vectors(z, scale_vector(Fraction(rng.randint(-bound, bound)), basis))
    return z


def decompose(
    a: StructureAlgebra,
    form: LinearFunctional,
    seed: int = 0,
    max_retries: int = DEFAULT_MAX_RETRIES,
    coefficient_bound: int = DEFAULT_COEFFICIENT_BOUND,
) -> Tuple[Decomposition, FrobeniusAlgebra]:
    require_valid(a)
    if not check_semisimple(a):
        raise NotSemisimple("the trace form of the algebra is degenerate")
    failures = check_symmetric_frobenius(a, form)
    if failures:
        raise NotFrobenius(f"not a symmetric Frobenius form: {failures[0].location}")

    center = center_basis(a)
    r = len(center)
    rng = random.Random(seed)
    idempotents = None
    for attempt in range(1, max_retries + 1):
        z = _sample_central(rng, center, a.dim, coefficient_bound)
        try:
            idempotents = central_idempotents(a, z, r)
            break
        except DegenerateSample as exc:
            logger.debug("central sample %d rejected: %s", attempt, exc)
    if idempotents is None:
        logger.warning("no separating central element after %d samples (seed=%d)", max_retries, seed)
        raise DegenerateSample(f"no separating central element after {max_retries} samples")

    blocks = []
    for e in idempotents:
        block_dim = rank(left_matrix(a, e))
        d = isqrt(block_dim)
        if d * d != block_dim:
            raise NotSplit(f"block of dimension {block_dim} is not a full matrix algebra over Q")
        blocks.append((d, form(e) / d, e))
    if sum(d * d for d, _, _ in blocks) != a.dim:
        raise NotSplit("block dimensions do not add up to the algebra dimension")
    for d, _, e in blocks:
        if d > 1:
            _require_split_block(a, e, d, rng, 8 * max_retries)

    blocks.sort(key=lambda b: (b[0], b[1], b[2]))
    skeleton = SemisimpleSkeleton(tuple(d for d, _, _ in blocks))
    decomposition = Decomposition(
        skeleton=skeleton,
        idempotents=tuple(e for _, _, e in blocks),
        block_order={i: d for i, d in enumerate(skeleton.block_dims)},
    )
    logger.debug("decomposed dim %d algebra into blocks %s", a.dim, list(skeleton.block_dims))
    return decomposition, FrobeniusAlgebra(skeleton, tuple(lam for _, lam, _ in blocks))
