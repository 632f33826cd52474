"""Skeletal Calabi-Yau categories and the Rep functor."""

from frobfix.cycat.category import (
    CYCategory,
    CYEndo,
    CYFunctorData,
    CYMap,
    CYObject,
    apply_functor,
    apply_functor_map,
    check_cy_axioms,
    check_cy_functor,
    check_cy_functor_pairing,
    pairing_gram,
    trace_of,
)
from frobfix.cycat.rep import (
    cy_from_fixed_point,
    fixed_point_from_cy,
    hs_trace,
    rep_morphism,
    rep_object,
    rep_trace,
)

__all__ = [
    "CYCategory",
    "CYEndo",
    "CYFunctorData",
    "CYMap",
    "CYObject",
    "apply_functor",
    "apply_functor_map",
    "check_cy_axioms",
    "check_cy_functor",
    "check_cy_functor_pairing",
    "cy_from_fixed_point",
    "fixed_point_from_cy",
    "hs_trace",
    "pairing_gram",
    "rep_morphism",
    "rep_object",
    "rep_trace",
    "trace_of",
]
