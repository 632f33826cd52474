import os
import random
from fractions import Fraction
from typing import List, Optional, Sequence

import pytest
from hypothesis import settings

from frobfix.fixedpoint import FullFixedPointData
from frobfix.skeletal import FrobeniusAlgebra, MoritaContext, MoritaMorphism, compose, identity_context, morphism_from_f

settings.register_profile("frobfix", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("frobfix")

ROOT = os.path.dirname(os.path.abspath(__file__))
FIXTURES_DIR = os.path.join(ROOT, "frobfix", "data", "fixtures")

SCALARS = [Fraction(s * n) for n in range(1, 6) for s in (1, -1)] + [
    Fraction(s, q) for q in (2, 3) for s in (1, -1)
]


class RandomInstances:
    """Seeded generators for skeletal data: r <= 4 blocks, d_i <= 3, scalars from SCALARS."""

    def __init__(self, rng: random.Random) -> None:
        self.rng = rng

    def scalar(self) -> Fraction:
        return self.rng.choice(SCALARS)

    def scalars(self, r: int) -> List[Fraction]:
        return [self.scalar() for _ in range(r)]

    def perm(self, r: int) -> List[int]:
        p = list(range(r))
        self.rng.shuffle(p)
        return p

    def dims(self, r: Optional[int] = None) -> List[int]:
        r = r or self.rng.randint(1, 4)
        return [self.rng.randint(1, 3) for _ in range(r)]

    def frobenius(self, dims: Optional[Sequence[int]] = None) -> FrobeniusAlgebra:
        dims = list(dims) if dims is not None else self.dims()
        return FrobeniusAlgebra.of(dims, self.scalars(len(dims)))

    def context(
        self,
        source: Optional[FrobeniusAlgebra] = None,
        perm: Optional[Sequence[int]] = None,
        compatible: Optional[bool] = None,
        eps: Optional[Sequence[Fraction]] = None,
    ) -> MoritaContext:
        """A valid context (eps = eta). compatible=None leaves the target scalars random."""
        a = source or self.frobenius()
        sigma = list(perm) if perm is not None else self.perm(a.r)
        dims = [0] * a.r
        lambdas = self.scalars(a.r)
        for i, j in enumerate(sigma):
            dims[j] = a.block_dims[i]
            if compatible is not None:
                lambdas[j] = a.lambdas[i]
        if compatible is False:
            i = self.rng.randrange(a.r)
            lambdas[sigma[i]] = a.lambdas[i] * self.rng.choice([2, 3, -1, Fraction(1, 2)])
        b = FrobeniusAlgebra.of(dims, lambdas)
        eps = list(eps) if eps is not None else self.scalars(a.r)
        return MoritaContext(a, b, tuple(sigma), tuple(eps), tuple(eps))

    def morphism(self, r: int) -> MoritaMorphism:
        return MoritaMorphism(tuple(self.scalars(r)), tuple(self.scalars(r)))

    def fixed_point_data(self, obj: FrobeniusAlgebra) -> FullFixedPointData:
        """Coherent data off the expand path: Theta = id with eps = eta = +-1, M random, Pi = M."""
        signs = tuple(self.rng.choice((1, -1)) for _ in range(obj.r))
        theta = MoritaContext(obj, obj, tuple(range(obj.r)), signs, signs)
        m = self.scalars(obj.r)
        return FullFixedPointData(
            obj=obj,
            theta=theta,
            big_m=morphism_from_f(theta, identity_context(obj), m),
            lambda_tilde=morphism_from_f(theta, theta, self.scalars(obj.r)),
            pi=morphism_from_f(compose(theta, theta), theta, m),
        )


@pytest.fixture
def gen() -> RandomInstances:
    return RandomInstances(random.Random(20240611))


@pytest.fixture
def fixtures_dir() -> str:
    return FIXTURES_DIR
