"""2-cells between Morita contexts in the strict skeletal model.

A 2-cell is read off a MoritaMorphism as its per-block f scalars (g is fixed
by the eta triangle). All composites are indexed by the source block of the
first context.
"""
from fractions import Fraction
from typing import Sequence, Tuple

from frobfix.errors import ShapeMismatch
from frobfix.skeletal.morita import MoritaMorphism

Cell = Tuple[Fraction, ...]


def cell_of(phi: MoritaMorphism) -> Cell:
    return phi.f_scalars


def identity_cell(r: int) -> Cell:
    return tuple(Fraction(1) for _ in range(r))


def inverse_cell(cell: Sequence[Fraction]) -> Cell:
    return tuple(1 / v for v in cell)


def vertical(second: Sequence[Fraction], first: Sequence[Fraction]) -> Cell:
    if len(second) != len(first):
        raise ShapeMismatch(f"cannot stack 2-cells on {len(first)} and {len(second)} blocks")
    return tuple(b * a for b, a in zip(second, first))


def horizontal(beta: Sequence[Fraction], alpha: Sequence[Fraction], first_perm: Sequence[int]) -> Cell:
    """beta * alpha for alpha on the first context and beta on the second.

    Block i of the composite is M2_{sigma(i)} (x) M1_i, where sigma is the
    permutation of alpha's contexts.
    """
    if not len(beta) == len(alpha) == len(first_perm):
        raise ShapeMismatch("horizontal composite needs cells on the same number of blocks")
    return tuple(alpha[i] * beta[first_perm[i]] for i in range(len(alpha)))
