"""Homotopy fixed points of the trivial SO(2)-action on the skeletal Morita bicategory."""

from frobfix.fixedpoint.coherence import (
    check_2morphism_auto,
    check_fp_morphism,
    derive_m,
    expand,
    fixed_point_morphism,
    forget,
    fp_morphism_report,
    morphism_coherence,
    verify_coherence,
)
from frobfix.fixedpoint.data import FixedPointMorphism, FixedPointObject, FullFixedPointData
from frobfix.fixedpoint.equivalence import (
    frob_equivalence_check,
    from_frobenius,
    to_frobenius,
    transport_context,
)

__all__ = [
    "FixedPointMorphism",
    "FixedPointObject",
    "FullFixedPointData",
    "check_2morphism_auto",
    "check_fp_morphism",
    "derive_m",
    "expand",
    "fixed_point_morphism",
    "forget",
    "fp_morphism_report",
    "frob_equivalence_check",
    "from_frobenius",
    "morphism_coherence",
    "to_frobenius",
    "transport_context",
    "verify_coherence",
]
