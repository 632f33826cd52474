"""Skeletal Morita bicategory of semisimple symmetric Frobenius algebras."""

from frobfix.skeletal.compatibility import (
    check_compatible,
    compatibility_verdicts,
    induced_f,
    trace_chart,
)
from frobfix.skeletal.morita import (
    MoritaContext,
    MoritaMorphism,
    bimodule_of,
    check_context_morphism,
    check_morita_axioms,
    compose,
    compose_morphisms,
    identity_context,
    identity_morphism,
    invert,
    invert_morphism,
    is_morita_bimodule,
    morphism_from_f,
)
from frobfix.skeletal.types import FrobeniusAlgebra, SemisimpleSkeleton, SkeletalBimodule, skeleton_of, tensor

__all__ = [
    "FrobeniusAlgebra",
    "MoritaContext",
    "MoritaMorphism",
    "SemisimpleSkeleton",
    "SkeletalBimodule",
    "bimodule_of",
    "check_compatible",
    "check_context_morphism",
    "check_morita_axioms",
    "compatibility_verdicts",
    "compose",
    "compose_morphisms",
    "identity_context",
    "identity_morphism",
    "induced_f",
    "invert",
    "invert_morphism",
    "is_morita_bimodule",
    "morphism_from_f",
    "skeleton_of",
    "tensor",
    "trace_chart",
]
