"""Fixed points of the trivial SO(2)-action versus symmetric Frobenius algebras.

A fixed point (A, a) with reference form lambda_ref corresponds to the
Frobenius algebra whose form is lambda_ref multiplied by the central unit a,
that is lambda'_i = lambda_ref_i * a_i on block i.
"""
from typing import Optional, Tuple

from frobfix.errors import ShapeMismatch
from frobfix.fixedpoint.data import FixedPointObject
from frobfix.skeletal.morita import MoritaContext
from frobfix.skeletal.types import FrobeniusAlgebra, skeleton_of


def to_frobenius(p: FixedPointObject) -> FrobeniusAlgebra:
    return FrobeniusAlgebra(
        p.algebra.skeleton,
        tuple(ref * a for ref, a in zip(p.algebra.lambdas, p.lambda_central)),
    )


def from_frobenius(frob: FrobeniusAlgebra, reference: Optional[FrobeniusAlgebra] = None) -> FixedPointObject:
    """Inverse of to_frobenius; the reference defaults to the trace form."""
    if reference is None:
        reference = FrobeniusAlgebra.trace_form(frob.skeleton)
    if reference.skeleton != frob.skeleton:
        raise ShapeMismatch("reference form lives on a different skeleton")
    return FixedPointObject(reference, tuple(v / ref for v, ref in zip(frob.lambdas, reference.lambdas)))


def transport_context(f: MoritaContext, p: FixedPointObject, p_target: FixedPointObject) -> MoritaContext:
    """The same context, now between the Frobenius algebras of p and p_target.

    Compatibility of the result matches the fixed-point morphism condition
    only against the trace form, so both references must be all ones.
    """
    if skeleton_of(f.source) != p.algebra.skeleton or skeleton_of(f.target) != p_target.algebra.skeleton:
        raise ShapeMismatch("the context does not run between the underlying algebras")
    for name, q in (("source", p), ("target", p_target)):
        if any(v != 1 for v in q.algebra.lambdas):
            raise ShapeMismatch(
                f"{name} fixed point has reference form {[str(v) for v in q.algebra.lambdas]}, "
                "transport needs the trace form"
            )
    return MoritaContext(to_frobenius(p), to_frobenius(p_target), f.perm, f.eps, f.eta)


def frob_equivalence_check(p: FixedPointObject) -> Tuple[FrobeniusAlgebra, FixedPointObject]:
    frob = to_frobenius(p)
    return frob, from_frobenius(frob, p.algebra)
