"""The Rep functor: Frobenius algebras to Calabi-Yau categories.

A module over A = M_{d_1}(Q) + ... + M_{d_r}(Q) is S_1^m_1 + ... + S_r^m_r and
its endomorphisms are block maps. The Hattori-Stallings trace lands in
A/[A,A] = Q^r in the block-trace chart, normalized so that the identity of
S_i goes to the class of a rank-one idempotent of block i.
"""
from fractions import Fraction
from typing import Optional

from frobfix.cycat.category import CYCategory, CYFunctorData, CYMap, CYObject, identity_map
from frobfix.errors import ShapeMismatch
from frobfix.exactlin.rational import Vector, dot
from frobfix.fixedpoint.data import FixedPointObject
from frobfix.fixedpoint.equivalence import to_frobenius
from frobfix.skeletal.morita import MoritaContext, require_context
from frobfix.skeletal.types import FrobeniusAlgebra, SemisimpleSkeleton, SkeletalObject, skeleton_of


def hs_trace(a: SkeletalObject, module: CYObject, f: CYMap) -> Vector:
    r = skeleton_of(a).r
    if module.r != r:
        raise ShapeMismatch(f"module over {module.r} simples for an algebra with {r} blocks")
    if f.source != module or f.target != module:
        raise ShapeMismatch("Hattori-Stallings trace needs an endomorphism of the module")
    return tuple(b.trace() for b in f.blocks)


def rep_trace(a: FrobeniusAlgebra, module: CYObject, f: CYMap) -> Fraction:
    """lambda o HS: the Calabi-Yau trace Rep(A) carries."""
    return dot(a.lambdas, hs_trace(a, module, f))


def rep_object(a: FrobeniusAlgebra) -> CYCategory:
    traces = []
    for i in range(a.r):
        simple = CYObject.simple(a.r, i)
        traces.append(rep_trace(a, simple, identity_map(simple)))
    return CYCategory(tuple(traces))


def rep_morphism(m: MoritaContext) -> CYFunctorData:
    """Tensoring with the bimodule of m sends S_i to T_sigma(i)."""
    require_context(m)
    return CYFunctorData(m.perm)


def cy_from_fixed_point(p: FixedPointObject) -> CYCategory:
    return rep_object(to_frobenius(p))


def fixed_point_from_cy(cy: CYCategory, skeleton: Optional[SemisimpleSkeleton] = None) -> FixedPointObject:
    """A fixed point whose Rep is cy: lambda_central = traces over the trace form."""
    if skeleton is None:
        skeleton = SemisimpleSkeleton(tuple(1 for _ in range(cy.simples)))
    if skeleton.r != cy.simples:
        raise ShapeMismatch(f"skeleton with {skeleton.r} blocks for {cy.simples} simples")
    return FixedPointObject(FrobeniusAlgebra.trace_form(skeleton), cy.traces)
