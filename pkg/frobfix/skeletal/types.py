from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from frobfix.errors import FrobfixError, ShapeMismatch
from frobfix.exactlin import RatMatrix
from frobfix.exactlin.rational import RatLike, to_rat


@dataclass(frozen=True)
class SemisimpleSkeleton:
    """Block sizes of A = M_{d_1}(Q) + ... + M_{d_r}(Q)."""

    block_dims: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "block_dims", tuple(int(d) for d in self.block_dims))
        if not self.block_dims:
            raise FrobfixError("a skeleton needs at least one block")
        if any(d < 1 for d in self.block_dims):
            raise FrobfixError(f"block dimensions must be positive, got {list(self.block_dims)}")

    @property
    def r(self) -> int:
        return len(self.block_dims)

    @property
    def dim(self) -> int:
        return sum(d * d for d in self.block_dims)


@dataclass(frozen=True)
class FrobeniusAlgebra:
    """Skeletal symmetric Frobenius algebra: the form is the sum of lambda_i * tr on block i."""

    skeleton: SemisimpleSkeleton
    lambdas: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambdas", tuple(to_rat(v) for v in self.lambdas))
        if len(self.lambdas) != self.skeleton.r:
            raise ShapeMismatch(f"{len(self.lambdas)} lambdas for {self.skeleton.r} blocks")
        zeros = [i for i, v in enumerate(self.lambdas) if v == 0]
        if zeros:
            raise FrobfixError(f"Frobenius scalars must be nonzero, block(s) {zeros} vanish")

    @classmethod
    def of(cls, dims: Sequence[int], lambdas: Sequence[RatLike]) -> "FrobeniusAlgebra":
        return cls(SemisimpleSkeleton(tuple(dims)), tuple(to_rat(v) for v in lambdas))

    @classmethod
    def trace_form(cls, skeleton: SemisimpleSkeleton) -> "FrobeniusAlgebra":
        return cls(skeleton, tuple(Fraction(1) for _ in range(skeleton.r)))

    @property
    def r(self) -> int:
        return self.skeleton.r

    @property
    def block_dims(self) -> Tuple[int, ...]:
        return self.skeleton.block_dims


def tensor(x: FrobeniusAlgebra, y: FrobeniusAlgebra) -> FrobeniusAlgebra:
    # M_d (x) M_e = M_{de}, and tr (x) tr = tr on it.
    return FrobeniusAlgebra.of(
        [d * e for d in x.block_dims for e in y.block_dims],
        [lam * mu for lam in x.lambdas for mu in y.lambdas],
    )


SkeletalObject = Union[SemisimpleSkeleton, FrobeniusAlgebra]


def skeleton_of(obj: SkeletalObject) -> SemisimpleSkeleton:
    return obj.skeleton if isinstance(obj, FrobeniusAlgebra) else obj


@dataclass(frozen=True)
class SkeletalBimodule:
    """_B M_A as the multiplicity matrix of T_i (x) S_j; mult is s x r."""

    source: SemisimpleSkeleton
    target: SemisimpleSkeleton
    mult: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mult", tuple(tuple(int(v) for v in row) for row in self.mult))
        if len(self.mult) != self.target.r or any(len(row) != self.source.r for row in self.mult):
            raise ShapeMismatch(
                f"multiplicities must be {self.target.r}x{self.source.r}"
            )
        if any(v < 0 for row in self.mult for v in row):
            raise FrobfixError("multiplicities must be nonnegative")

    def as_matrix(self) -> RatMatrix:
        return RatMatrix.from_rows(self.mult, cols=self.source.r)
