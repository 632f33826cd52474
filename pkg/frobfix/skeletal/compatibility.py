"""The induced map f: A/[A,A] -> B/[B,B] and compatibility with Frobenius forms.

A/[A,A] is charted as Q^r by block traces, since the commutators of a matrix
algebra are exactly its trace-zero matrices. Every quotient computation in
the package goes through this one chart.
"""
from typing import Dict, Iterable, Sequence, Tuple

from frobfix.errors import MissingFrobeniusData, ShapeMismatch
from frobfix.exactlin import RatMatrix
from frobfix.exactlin.rational import Vector
from frobfix.skeletal.morita import MoritaContext, require_context
from frobfix.skeletal.types import FrobeniusAlgebra, SemisimpleSkeleton, skeleton_of

MODES = (1, 2, 3)


def trace_chart(skeleton: SemisimpleSkeleton, blocks: Sequence[RatMatrix]) -> Vector:
    """Chart value of the class [A_1 + ... + A_r] in A/[A,A]."""
    if len(blocks) != skeleton.r:
        raise ShapeMismatch(f"{len(blocks)} blocks for a skeleton with {skeleton.r}")
    for i, (b, d) in enumerate(zip(blocks, skeleton.block_dims)):
        if b.shape != (d, d):
            raise ShapeMismatch(f"block {i} has shape {b.shape}, expected {(d, d)}")
    return tuple(b.trace() for b in blocks)


def _rank_one_class(skeleton: SemisimpleSkeleton, i: int) -> Tuple[RatMatrix, ...]:
    return tuple(
        RatMatrix.unit(d, d, 0, 0) if k == i else RatMatrix.zeros(d, d)
        for k, d in enumerate(skeleton.block_dims)
    )


def _apply_f(m: MoritaContext, blocks: Sequence[RatMatrix]) -> Tuple[RatMatrix, ...]:
    # [A_1 + ... + A_r] -> sum_i tr(A_i) [E_11 in block sigma(i) of B]
    dst = skeleton_of(m.target)
    out = [RatMatrix.zeros(n, n) for n in dst.block_dims]
    for i, block in enumerate(blocks):
        j = m.perm[i]
        n = dst.block_dims[j]
        out[j] = out[j] + RatMatrix.unit(n, n, 0, 0).scale(block.trace())
    return tuple(out)


def induced_f(m: MoritaContext) -> RatMatrix:
    """Matrix of f in trace coordinates; column i is the image of the i-th basis class."""
    require_context(m)
    src, dst = skeleton_of(m.source), skeleton_of(m.target)
    columns = [trace_chart(dst, _apply_f(m, _rank_one_class(src, i))) for i in range(src.r)]
    return RatMatrix.from_columns(columns)


def _frobenius_ends(m: MoritaContext) -> Tuple[FrobeniusAlgebra, FrobeniusAlgebra]:
    if not isinstance(m.source, FrobeniusAlgebra) or not isinstance(m.target, FrobeniusAlgebra):
        raise MissingFrobeniusData("both ends of the context need Frobenius scalars")
    return m.source, m.target


def _form_row(frob: FrobeniusAlgebra) -> RatMatrix:
    # lambda on A/[A,A]: a class with chart value v goes to sum_i lambda_i v_i.
    return RatMatrix.from_rows([frob.lambdas])


def _compatible_by_diagram(m: MoritaContext) -> bool:
    a, b = _frobenius_ends(m)
    return _form_row(b) @ induced_f(m) == _form_row(a)


def _matrix_units(rows: int, cols: int) -> Iterable[RatMatrix]:
    return (RatMatrix.unit(rows, cols, p, q) for p in range(rows) for q in range(cols))


def _compatible_by_central_action(m: MoritaContext) -> bool:
    a, b = _frobenius_ends(m)
    for i, j in enumerate(m.perm):
        d, n = a.block_dims[i], b.block_dims[j]
        a_i, b_j = a.lambdas[i], b.lambdas[j]
        # m.a = b.m on T_j (x) S_i, viewed as n x d matrices
        for unit in _matrix_units(n, d):
            if unit @ RatMatrix.scalar(d, a_i) != RatMatrix.scalar(n, b_j) @ unit:
                return False
        # n.b^-1 = a^-1.n on S_i (x) T_j, viewed as d x n matrices
        for unit in _matrix_units(d, n):
            if unit @ RatMatrix.scalar(n, 1 / b_j) != RatMatrix.scalar(d, 1 / a_i) @ unit:
                return False
    return True


def _compatible_by_scalars(m: MoritaContext) -> bool:
    a, b = _frobenius_ends(m)
    return all(a.lambdas[i] == b.lambdas[j] for i, j in enumerate(m.perm))


_CHECKS = {
    1: _compatible_by_diagram,
    2: _compatible_by_central_action,
    3: _compatible_by_scalars,
}


def check_compatible(m: MoritaContext, mode: int) -> bool:
    """Mode 1: lambda^B o f = lambda^A. Mode 2: m.a = b.m and n.b^-1 = a^-1.n. Mode 3: lambda^A_i = lambda^B_sigma(i)."""
    if mode not in _CHECKS:
        raise ValueError(f"unknown compatibility mode {mode!r}, expected one of {MODES}")
    _frobenius_ends(m)
    require_context(m)
    return _CHECKS[mode](m)


def compatibility_verdicts(m: MoritaContext) -> Dict[int, bool]:
    return {mode: check_compatible(m, mode) for mode in MODES}


def incompatible_blocks(m: MoritaContext) -> Sequence[int]:
    a, b = _frobenius_ends(m)
    return [i for i, j in enumerate(m.perm) if a.lambdas[i] != b.lambdas[j]]
