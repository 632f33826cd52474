"""Morita contexts between semisimple algebras in normal form.

After the multiplicities are shown to be trivial, a context A -> B is a
permutation sigma with M = sum_i T_{sigma(i)} (x) S_i and N the transpose, and
the structure isomorphisms are one scalar per block. Scalars are indexed by
the source block i; data of B is read through sigma.

Zig-zag convention: eps_i is the scalar of eps: N (x)_B M -> A and eta_i the
scalar of the inverse of eta, M (x)_A N -> B, both read on block i. Each
triangle then composes to eps_i / eta_i, which must be 1; the identity
context with eps = eta = 1 passes.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from frobfix.errors import (
    BlockCountMismatch,
    FrobfixError,
    InvalidContext,
    PermMismatch,
    ShapeMismatch,
    SourceTargetMismatch,
)
from frobfix.exactlin.rational import RatLike, to_rat
from frobfix.report import Finding, Findings
from frobfix.skeletal.types import (
    FrobeniusAlgebra,
    SkeletalBimodule,
    SkeletalObject,
    skeleton_of,
)

Perm = Tuple[int, ...]


def _check_perm(perm: Sequence[int], r: int) -> Perm:
    perm = tuple(int(p) for p in perm)
    if len(perm) != r or sorted(perm) != list(range(r)):
        raise ShapeMismatch(f"{list(perm)} is not a permutation of {r} blocks")
    return perm


def compose_perms(second: Sequence[int], first: Sequence[int]) -> Perm:
    """(second o first)(i) = second[first[i]]."""
    return tuple(second[p] for p in first)


def invert_perm(perm: Sequence[int]) -> Perm:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def _scalars(values: Sequence[RatLike], r: int, name: str) -> Tuple[Fraction, ...]:
    out = tuple(to_rat(v) for v in values)
    if len(out) != r:
        raise ShapeMismatch(f"{name} has {len(out)} entries for {r} blocks")
    if any(v == 0 for v in out):
        raise FrobfixError(f"{name} entries must be nonzero")
    return out


@dataclass(frozen=True)
class MoritaContext:
    source: SkeletalObject
    target: SkeletalObject
    perm: Perm
    eps: Tuple[Fraction, ...]
    eta: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        src, dst = skeleton_of(self.source), skeleton_of(self.target)
        if src.r != dst.r:
            raise BlockCountMismatch(f"source has {src.r} blocks, target has {dst.r}")
        perm = _check_perm(self.perm, src.r)
        for i, p in enumerate(perm):
            if src.block_dims[i] != dst.block_dims[p]:
                raise ShapeMismatch(
                    f"block {i} of dimension {src.block_dims[i]} sent to block {p} "
                    f"of dimension {dst.block_dims[p]}"
                )
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "eps", _scalars(self.eps, src.r, "eps"))
        object.__setattr__(self, "eta", _scalars(self.eta, src.r, "eta"))

    @property
    def r(self) -> int:
        return len(self.perm)


@dataclass(frozen=True)
class MoritaMorphism:
    """Per-block scalars of f: M -> M' and g: N -> N'."""

    f_scalars: Tuple[Fraction, ...]
    g_scalars: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        r = len(self.f_scalars)
        object.__setattr__(self, "f_scalars", _scalars(self.f_scalars, r, "f"))
        object.__setattr__(self, "g_scalars", _scalars(self.g_scalars, r, "g"))


def identity_context(obj: SkeletalObject) -> MoritaContext:
    r = skeleton_of(obj).r
    ones = tuple(Fraction(1) for _ in range(r))
    return MoritaContext(obj, obj, tuple(range(r)), ones, ones)


def bimodule_of(m: MoritaContext) -> SkeletalBimodule:
    src, dst = skeleton_of(m.source), skeleton_of(m.target)
    mult = [[1 if m.perm[j] == i else 0 for j in range(src.r)] for i in range(dst.r)]
    return SkeletalBimodule(src, dst, tuple(tuple(row) for row in mult))


def is_morita_bimodule(m: SkeletalBimodule) -> bool:
    if m.source.r != m.target.r:
        raise BlockCountMismatch(f"source has {m.source.r} blocks, target has {m.target.r}")
    rows_ok = all(sorted(row) == [0] * (len(row) - 1) + [1] for row in m.mult)
    cols_ok = all(sorted(col) == [0] * (len(col) - 1) + [1] for col in zip(*m.mult))
    return rows_ok and cols_ok


def check_morita_axioms(m: MoritaContext) -> Findings:
    findings: Findings = []
    for i in range(m.r):
        # Both triangles reduce to eps_i / eta_i on block i.
        zigzag = m.eps[i] / m.eta[i]
        if zigzag != 1:
            findings.append(
                Finding(
                    location=f"block {i}",
                    message=f"eta[{i}] != eps[{i}]",
                    data={"eps": m.eps[i], "eta": m.eta[i], "zigzag": zigzag},
                )
            )
    return findings


def require_context(m: MoritaContext) -> None:
    findings = check_morita_axioms(m)
    if findings:
        raise InvalidContext("; ".join(f.message for f in findings))


def _same_object(x: SkeletalObject, y: SkeletalObject) -> bool:
    if isinstance(x, FrobeniusAlgebra) and isinstance(y, FrobeniusAlgebra):
        return x == y
    return skeleton_of(x) == skeleton_of(y)


def compose(m2: MoritaContext, m1: MoritaContext) -> MoritaContext:
    """m2 o m1, i.e. the tensor product of bimodules M2 (x)_B M1."""
    if not _same_object(m1.target, m2.source):
        raise SourceTargetMismatch("target of the first context is not the source of the second")
    require_context(m1)
    require_context(m2)
    eps = tuple(m1.eps[i] * m2.eps[m1.perm[i]] for i in range(m1.r))
    eta = tuple(m1.eta[i] * m2.eta[m1.perm[i]] for i in range(m1.r))
    return MoritaContext(m1.source, m2.target, compose_perms(m2.perm, m1.perm), eps, eta)


def invert(m: MoritaContext) -> MoritaContext:
    require_context(m)
    inv = invert_perm(m.perm)
    eps = tuple(1 / m.eps[inv[j]] for j in range(m.r))
    eta = tuple(1 / m.eta[inv[j]] for j in range(m.r))
    return MoritaContext(m.target, m.source, inv, eps, eta)


def check_context_morphism(m: MoritaContext, other: MoritaContext, phi: MoritaMorphism) -> bool:
    if m.perm != other.perm:
        raise PermMismatch(f"permutations {list(m.perm)} and {list(other.perm)} differ")
    if len(phi.f_scalars) != m.r:
        raise ShapeMismatch(f"morphism has {len(phi.f_scalars)} blocks, contexts have {m.r}")
    return not morphism_findings(m, other, phi)


def morphism_findings(m: MoritaContext, other: MoritaContext, phi: MoritaMorphism) -> Findings:
    findings: Findings = []
    for i, (f, g) in enumerate(zip(phi.f_scalars, phi.g_scalars)):
        if f * g * m.eta[i] != other.eta[i]:
            findings.append(Finding(f"block {i}", "eta triangle fails: f g eta != eta'"))
        if other.eps[i] * g * f != m.eps[i]:
            findings.append(Finding(f"block {i}", "eps triangle fails: eps' g f != eps"))
    return findings


def identity_morphism(m: MoritaContext) -> MoritaMorphism:
    ones = tuple(Fraction(1) for _ in range(m.r))
    return MoritaMorphism(ones, ones)


def morphism_from_f(m: MoritaContext, other: MoritaContext, f_scalars: Sequence[RatLike]) -> MoritaMorphism:
    """Complete f to (f, g) by solving the eta triangle for g."""
    f = _scalars(f_scalars, m.r, "f")
    g = tuple(other.eta[i] / (f[i] * m.eta[i]) for i in range(m.r))
    return MoritaMorphism(f, g)


def compose_morphisms(second: MoritaMorphism, first: MoritaMorphism) -> MoritaMorphism:
    return MoritaMorphism(
        tuple(a * b for a, b in zip(second.f_scalars, first.f_scalars)),
        tuple(a * b for a, b in zip(second.g_scalars, first.g_scalars)),
    )


def invert_morphism(phi: MoritaMorphism) -> MoritaMorphism:
    return MoritaMorphism(tuple(1 / v for v in phi.f_scalars), tuple(1 / v for v in phi.g_scalars))


def failing_blocks(findings: Findings) -> List[int]:
    return sorted({int(f.location.split()[-1]) for f in findings if f.location.startswith("block ")})
