from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from frobfix.errors import FrobfixError, ShapeMismatch
from frobfix.exactlin.rational import to_rat
from frobfix.skeletal.morita import MoritaContext, MoritaMorphism, require_context
from frobfix.skeletal.types import FrobeniusAlgebra, skeleton_of


@dataclass(frozen=True)
class FixedPointObject:
    """A pair (c, lambda) with lambda: id_c => id_c stored as one central scalar per block."""

    algebra: FrobeniusAlgebra
    lambda_central: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(to_rat(v) for v in self.lambda_central)
        if len(values) != self.algebra.r:
            raise ShapeMismatch(f"lambda_central has {len(values)} entries for {self.algebra.r} blocks")
        if any(v == 0 for v in values):
            raise FrobfixError("lambda_central entries must be nonzero")
        object.__setattr__(self, "lambda_central", values)

    @property
    def r(self) -> int:
        return self.algebra.r


@dataclass(frozen=True)
class FullFixedPointData:
    """(c, Theta, M, lambda~, Pi) with M: Theta => id_c, lambda~: Theta => Theta, Pi: Theta o Theta => Theta."""

    obj: FrobeniusAlgebra
    theta: MoritaContext
    big_m: MoritaMorphism
    lambda_tilde: MoritaMorphism
    pi: MoritaMorphism

    def __post_init__(self) -> None:
        if skeleton_of(self.theta.source) != self.obj.skeleton or skeleton_of(self.theta.target) != self.obj.skeleton:
            raise ShapeMismatch("Theta must be a context from the object to itself")
        for name in ("big_m", "lambda_tilde", "pi"):
            n = len(getattr(self, name).f_scalars)
            if n != self.obj.r:
                raise ShapeMismatch(f"{name} has {n} blocks, the object has {self.obj.r}")

    @property
    def r(self) -> int:
        return self.obj.r


@dataclass(frozen=True)
class FixedPointMorphism:
    """A context f between the underlying algebras with its derived 2-cell m: f o Theta => Theta' o f."""

    source: FullFixedPointData
    target: FullFixedPointData
    context: MoritaContext
    derived_m: MoritaMorphism

    def __post_init__(self) -> None:
        require_context(self.context)
        if len(self.derived_m.f_scalars) != self.context.r:
            raise ShapeMismatch(f"derived_m has {len(self.derived_m.f_scalars)} blocks, the context has {self.context.r}")
