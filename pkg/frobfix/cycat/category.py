"""Skeletal Calabi-Yau categories.

A finite semisimple category is its list of simples X_1..X_r. An object is a
multiplicity vector m, Hom(c, d) is the space of block maps with one
n_i x m_i matrix per simple, and composition is blockwise. A Calabi-Yau
structure is one nonzero trace scalar t_i per simple.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import List, Sequence, Tuple

from frobfix.errors import FrobfixError, ShapeMismatch, SimpleCountMismatch
from frobfix.exactlin import RatMatrix, block_diagonal, rank
from frobfix.exactlin.rational import to_rat
from frobfix.report import Finding, Findings
from frobfix.skeletal.morita import Perm, compose_perms, invert_perm


@dataclass(frozen=True)
class CYCategory:
    traces: Tuple[Fraction, ...]
    allow_degenerate: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "traces", tuple(to_rat(t) for t in self.traces))
        if not self.traces:
            raise FrobfixError("a Calabi-Yau category needs at least one simple")
        if not self.allow_degenerate and any(t == 0 for t in self.traces):
            raise FrobfixError("trace scalars must be nonzero")

    @property
    def simples(self) -> int:
        return len(self.traces)


@dataclass(frozen=True)
class CYObject:
    """c = X_1^m_1 + ... + X_r^m_r."""

    multiplicities: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "multiplicities", tuple(int(m) for m in self.multiplicities))
        if any(m < 0 for m in self.multiplicities):
            raise FrobfixError(f"multiplicities must be nonnegative, got {list(self.multiplicities)}")

    @classmethod
    def simple(cls, r: int, i: int) -> "CYObject":
        return cls(tuple(1 if k == i else 0 for k in range(r)))

    @property
    def r(self) -> int:
        return len(self.multiplicities)


@dataclass(frozen=True)
class CYMap:
    """A morphism c -> d as one n_i x m_i block per simple."""

    source: CYObject
    target: CYObject
    blocks: Tuple[RatMatrix, ...]

    def __post_init__(self) -> None:
        if self.source.r != self.target.r:
            raise SimpleCountMismatch(f"objects over {self.source.r} and {self.target.r} simples")
        if len(self.blocks) != self.source.r:
            raise ShapeMismatch(f"{len(self.blocks)} blocks for {self.source.r} simples")
        for i, (b, m, n) in enumerate(zip(self.blocks, self.source.multiplicities, self.target.multiplicities)):
            if b.shape != (n, m):
                raise ShapeMismatch(f"block {i} has shape {b.shape}, expected {(n, m)}")

    @property
    def is_endo(self) -> bool:
        return self.source == self.target


# End(c) is Hom(c, c).
CYEndo = CYMap


@dataclass(frozen=True)
class CYFunctorData:
    """A skeletal equivalence: simple X_i goes to X_perm(i)."""

    perm: Perm

    def __post_init__(self) -> None:
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise ShapeMismatch(f"{list(perm)} is not a permutation")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, r: int) -> "CYFunctorData":
        return cls(tuple(range(r)))


def compose_functors(second: CYFunctorData, first: CYFunctorData) -> CYFunctorData:
    return CYFunctorData(compose_perms(second.perm, first.perm))


def invert_functor(F: CYFunctorData) -> CYFunctorData:
    return CYFunctorData(invert_perm(F.perm))


def endo(c: CYObject, blocks: Sequence[RatMatrix]) -> CYMap:
    return CYMap(c, c, tuple(blocks))


def identity_map(c: CYObject) -> CYMap:
    return endo(c, [RatMatrix.identity(m) for m in c.multiplicities])


def zero_map(c: CYObject, d: CYObject) -> CYMap:
    return CYMap(c, d, tuple(RatMatrix.zeros(n, m) for m, n in zip(c.multiplicities, d.multiplicities)))


def compose_maps(g: CYMap, f: CYMap) -> CYMap:
    if f.target != g.source:
        raise ShapeMismatch("maps are not composable")
    return CYMap(f.source, g.target, tuple(gb @ fb for gb, fb in zip(g.blocks, f.blocks)))


def subtract_maps(f: CYMap, g: CYMap) -> CYMap:
    if (f.source, f.target) != (g.source, g.target):
        raise ShapeMismatch("maps are not parallel")
    return CYMap(f.source, f.target, tuple(a - b for a, b in zip(f.blocks, g.blocks)))


def direct_sum(c: CYObject, d: CYObject) -> CYObject:
    if c.r != d.r:
        raise SimpleCountMismatch(f"objects over {c.r} and {d.r} simples")
    return CYObject(tuple(a + b for a, b in zip(c.multiplicities, d.multiplicities)))


def direct_sum_maps(f: CYMap, g: CYMap) -> CYMap:
    return CYMap(
        direct_sum(f.source, g.source),
        direct_sum(f.target, g.target),
        tuple(block_diagonal([a, b]) for a, b in zip(f.blocks, g.blocks)),
    )


def _check_simples(cy: CYCategory, c: CYObject) -> None:
    if c.r != cy.simples:
        raise ShapeMismatch(f"object over {c.r} simples in a category with {cy.simples}")


def trace_of(cy: CYCategory, c: CYObject, f: CYMap) -> Fraction:
    _check_simples(cy, c)
    if f.source != c or f.target != c:
        raise ShapeMismatch("trace needs an endomorphism of the given object")
    return sum((t * b.trace() for t, b in zip(cy.traces, f.blocks)), Fraction(0))


def hom_basis(c: CYObject, d: CYObject) -> List[CYMap]:
    basis = []
    for i, (m, n) in enumerate(zip(c.multiplicities, d.multiplicities)):
        for p in range(n):
            for q in range(m):
                blocks = list(zero_map(c, d).blocks)
                blocks[i] = RatMatrix.unit(n, m, p, q)
                basis.append(CYMap(c, d, tuple(blocks)))
    return basis


def pairing_gram(cy: CYCategory, c: CYObject, d: CYObject) -> RatMatrix:
    """G[a][b] = tr_c(g_b o f_a) for f_a, g_b running over Hom(c, d) and Hom(d, c)."""
    _check_simples(cy, c)
    _check_simples(cy, d)
    fs, gs = hom_basis(c, d), hom_basis(d, c)
    return RatMatrix.from_rows(
        [[trace_of(cy, c, compose_maps(g, f)) for g in gs] for f in fs],
        cols=len(gs),
    )


def random_map(rng: random.Random, c: CYObject, d: CYObject, bound: int = 5) -> CYMap:
    blocks = []
    for m, n in zip(c.multiplicities, d.multiplicities):
        rows = [[Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(m)] for _ in range(n)]
        blocks.append(RatMatrix(n, m, tuple(v for row in rows for v in row)))
    return CYMap(c, d, tuple(blocks))


def _label(c: CYObject) -> str:
    return "X^" + ",".join(str(m) for m in c.multiplicities)


def check_cy_axioms(cy: CYCategory, sample_objects: Sequence[CYObject], seed: int = 0) -> Findings:
    """Cyclicity and additivity on random maps between the samples, nondegeneracy by Gram rank."""
    rng = random.Random(seed)
    for c in sample_objects:
        _check_simples(cy, c)
    findings: Findings = []
    for c, d in combinations_with_replacement(sample_objects, 2):
        f, g = random_map(rng, c, d), random_map(rng, d, c)
        left, right = trace_of(cy, c, compose_maps(g, f)), trace_of(cy, d, compose_maps(f, g))
        if left != right:
            findings.append(
                Finding(f"cyclicity({_label(c)},{_label(d)})", "tr_c(g f) != tr_d(f g)", {"lhs": left, "rhs": right})
            )
        fc, fd = random_map(rng, c, c), random_map(rng, d, d)
        whole = trace_of(cy, direct_sum(c, d), direct_sum_maps(fc, fd))
        parts = trace_of(cy, c, fc) + trace_of(cy, d, fd)
        if whole != parts:
            findings.append(
                Finding(f"additivity({_label(c)},{_label(d)})", "tr(f + g) != tr(f) + tr(g)", {"lhs": whole, "rhs": parts})
            )
        gram = pairing_gram(cy, c, d)
        if rank(gram) < gram.rows:
            findings.append(
                Finding(
                    f"nondegeneracy({_label(c)},{_label(d)})",
                    "the trace pairing Hom(c,d) x Hom(d,c) is degenerate",
                    {"rank": rank(gram), "dim": gram.rows},
                )
            )
    for i in range(cy.simples):
        x = CYObject.simple(cy.simples, i)
        if rank(pairing_gram(cy, x, x)) < 1:
            findings.append(Finding(f"nondegeneracy(X{i})", f"t[{i}] = 0 makes End(X{i}) pair to zero"))
    return findings


def check_cy_functor(src: CYCategory, dst: CYCategory, F: CYFunctorData) -> bool:
    if src.simples != dst.simples or len(F.perm) != src.simples:
        raise SimpleCountMismatch(f"{src.simples} and {dst.simples} simples, functor on {len(F.perm)}")
    return all(src.traces[i] == dst.traces[p] for i, p in enumerate(F.perm))


def apply_functor(F: CYFunctorData, c: CYObject) -> CYObject:
    if c.r != len(F.perm):
        raise SimpleCountMismatch(f"functor on {len(F.perm)} simples applied to an object over {c.r}")
    mult = [0] * c.r
    for i, p in enumerate(F.perm):
        mult[p] = c.multiplicities[i]
    return CYObject(tuple(mult))


def apply_functor_map(F: CYFunctorData, f: CYMap) -> CYMap:
    blocks: List[RatMatrix] = list(f.blocks)
    for i, p in enumerate(F.perm):
        blocks[p] = f.blocks[i]
    return CYMap(apply_functor(F, f.source), apply_functor(F, f.target), tuple(blocks))


def check_cy_functor_pairing(
    src: CYCategory,
    dst: CYCategory,
    F: CYFunctorData,
    sample_objects: Sequence[CYObject],
    seed: int = 0,
) -> Findings:
    """<F f, F g> = <f, g> on random maps between the samples."""
    if src.simples != dst.simples:
        raise SimpleCountMismatch(f"{src.simples} and {dst.simples} simples")
    rng = random.Random(seed)
    findings: Findings = []
    for c, d in combinations_with_replacement(sample_objects, 2):
        f, g = random_map(rng, c, d), random_map(rng, d, c)
        before = trace_of(src, c, compose_maps(g, f))
        after = trace_of(dst, apply_functor(F, c), compose_maps(apply_functor_map(F, g), apply_functor_map(F, f)))
        if before != after:
            findings.append(
                Finding(f"pairing({_label(c)},{_label(d)})", "<F f, F g> != <f, g>", {"lhs": after, "rhs": before})
            )
    return findings
