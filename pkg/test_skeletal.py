from fractions import Fraction

import pytest

from frobfix.errors import (
    BlockCountMismatch,
    InvalidContext,
    MissingFrobeniusData,
    PermMismatch,
    ShapeMismatch,
    SourceTargetMismatch,
)
from frobfix.exactlin import inverse, permutation_matrix
from frobfix.skeletal import (
    FrobeniusAlgebra,
    MoritaContext,
    MoritaMorphism,
    SemisimpleSkeleton,
    SkeletalBimodule,
    bimodule_of,
    check_compatible,
    check_context_morphism,
    check_morita_axioms,
    compatibility_verdicts,
    compose,
    identity_context,
    identity_morphism,
    induced_f,
    invert,
    is_morita_bimodule,
    morphism_from_f,
)
from frobfix.skeletal.compatibility import incompatible_blocks
from frobfix.skeletal.morita import compose_morphisms, failing_blocks, invert_morphism

A12 = FrobeniusAlgebra.of([1, 2], [2, 3])


def _single(eps, eta=None) -> MoritaContext:
    q = SemisimpleSkeleton((1,))
    return MoritaContext(q, q, (0,), (eps,), (eta if eta is not None else eps,))


def test_identity_context_passes_axioms() -> None:
    assert check_morita_axioms(identity_context(A12)) == []
    assert check_morita_axioms(_single(2)) == []


def test_eta_mismatch_fails_on_first_block() -> None:
    findings = check_morita_axioms(_single(2, 3))
    assert len(findings) == 1
    assert findings[0].location == "block 0"
    assert findings[0].message == "eta[0] != eps[0]"
    assert findings[0].data["zigzag"] == Fraction(2, 3)


def test_axioms_pass_exactly_when_eps_equals_eta(gen) -> None:
    for _ in range(100):
        a = gen.frobenius()
        eps = gen.scalars(a.r)
        eta = [e if gen.rng.random() < 0.6 else gen.scalar() for e in eps]
        sigma = tuple(range(a.r))
        m = MoritaContext(a, a, sigma, tuple(eps), tuple(eta))
        bad = [i for i in range(a.r) if eps[i] != eta[i]]
        assert failing_blocks(check_morita_axioms(m)) == bad


def test_context_rejects_mismatched_block_dims() -> None:
    with pytest.raises(ShapeMismatch):
        MoritaContext(A12, A12, (1, 0), (1, 1), (1, 1))
    with pytest.raises(BlockCountMismatch):
        MoritaContext(A12, FrobeniusAlgebra.of([1], [1]), (0,), (1,), (1,))
    with pytest.raises(ShapeMismatch):
        MoritaContext(A12, A12, (0, 0), (1, 1), (1, 1))


def test_is_morita_bimodule() -> None:
    s3 = SemisimpleSkeleton((1, 1, 1))
    identity = SkeletalBimodule(s3, s3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    cyclic = SkeletalBimodule(s3, s3, ((0, 0, 1), (1, 0, 0), (0, 1, 0)))
    doubled = SkeletalBimodule(s3, s3, ((2, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert is_morita_bimodule(identity)
    assert is_morita_bimodule(cyclic)
    assert not is_morita_bimodule(doubled)
    with pytest.raises(BlockCountMismatch):
        is_morita_bimodule(SkeletalBimodule(s3, SemisimpleSkeleton((1,)), ((1, 0, 0),)))


def test_bimodule_of_valid_context_is_morita(gen) -> None:
    for _ in range(50):
        assert is_morita_bimodule(bimodule_of(gen.context()))


def test_compose_examples() -> None:
    s = SemisimpleSkeleton((1, 1, 1))
    ones = (1, 1, 1)
    m1 = MoritaContext(s, s, (1, 0, 2), (2, 3, 5), (2, 3, 5))
    m2 = MoritaContext(s, s, (0, 2, 1), ones, ones)
    assert compose(m2, m1).perm == (2, 0, 1)
    assert compose(m1, identity_context(s)) == m1
    assert compose(invert(m1), m1) == identity_context(s)


def test_compose_scalars_follow_the_first_perm() -> None:
    s = SemisimpleSkeleton((1, 1))
    m1 = MoritaContext(s, s, (1, 0), (2, 3), (2, 3))
    m2 = MoritaContext(s, s, (0, 1), (5, 7), (5, 7))
    assert compose(m2, m1).eps == (Fraction(14), Fraction(15))


def test_compose_rejects_bad_inputs() -> None:
    other = FrobeniusAlgebra.of([1, 2], [2, 5])
    with pytest.raises(SourceTargetMismatch):
        compose(identity_context(other), identity_context(A12))
    s = SemisimpleSkeleton((1,))
    with pytest.raises(InvalidContext):
        compose(_single(2, 3), identity_context(s))


def test_invert_examples() -> None:
    assert invert(identity_context(A12)) == identity_context(A12)
    assert invert(_single(2)).eps == (Fraction(1, 2),)
    s = SemisimpleSkeleton((1, 1, 1))
    m = MoritaContext(s, s, (1, 2, 0), (1, 2, 3), (1, 2, 3))
    inv = invert(m)
    assert inv.perm == (2, 0, 1)
    assert compose(inv, m) == identity_context(s)
    assert compose(m, inv) == identity_context(s)


def test_induced_f_examples() -> None:
    assert induced_f(identity_context(A12)) == permutation_matrix([0, 1])
    s = SemisimpleSkeleton((1, 2))
    assert induced_f(MoritaContext(s, s, (0, 1), (7, "1/3"), (7, "1/3"))) == permutation_matrix([0, 1])
    swap = MoritaContext(A12, FrobeniusAlgebra.of([2, 1], [3, 2]), (1, 0), (1, 1), (1, 1))
    assert induced_f(swap).to_rows() == [[0, 1], [1, 0]]
    with pytest.raises(InvalidContext):
        induced_f(_single(2, 3))


def test_induced_f_depends_only_on_perm(gen) -> None:
    for _ in range(100):
        m = gen.context()
        eps = tuple(gen.scalars(m.r))
        other = MoritaContext(m.source, m.target, m.perm, eps, eps)
        assert induced_f(m) == induced_f(other) == permutation_matrix(m.perm)


def test_induced_f_is_functorial(gen) -> None:
    for _ in range(50):
        m1 = gen.context()
        m2 = gen.context(source=m1.target)
        assert induced_f(compose(m2, m1)) == induced_f(m2) @ induced_f(m1)
        assert induced_f(invert(m1)) == inverse(induced_f(m1))


def test_check_compatible_examples() -> None:
    ident = identity_context(A12)
    assert compatibility_verdicts(ident) == {1: True, 2: True, 3: True}

    mismatch = MoritaContext(A12, FrobeniusAlgebra.of([1, 2], [2, 5]), (0, 1), (1, 1), (1, 1))
    assert compatibility_verdicts(mismatch) == {1: False, 2: False, 3: False}
    assert incompatible_blocks(mismatch) == [1]

    swap = MoritaContext(A12, FrobeniusAlgebra.of([2, 1], [3, 2]), (1, 0), (2, "1/3"), (2, "1/3"))
    assert compatibility_verdicts(swap) == {1: True, 2: True, 3: True}


def test_check_compatible_errors() -> None:
    with pytest.raises(ValueError):
        check_compatible(identity_context(A12), 4)
    with pytest.raises(MissingFrobeniusData):
        check_compatible(identity_context(SemisimpleSkeleton((1, 2))), 1)
    a = FrobeniusAlgebra.of([1], [1])
    with pytest.raises(InvalidContext):
        check_compatible(MoritaContext(a, a, (0,), (2,), (3,)), 3)


def test_compatibility_modes_agree(gen) -> None:
    seen = set()
    for k in range(200):
        compatible = (True, False, None)[k % 3]
        m = gen.context(compatible=compatible)
        verdicts = compatibility_verdicts(m)
        assert len(set(verdicts.values())) == 1
        if compatible is not None:
            assert verdicts[3] is compatible
        seen.add(verdicts[1])
    assert seen == {True, False}


def test_planted_incompatibility_keeps_target_scalars_nonzero(gen) -> None:
    # Negated scalars are where an additive shift could cancel.
    a = FrobeniusAlgebra.of([1, 2, 1], [-1, -2, "-1/2"])
    for _ in range(100):
        m = gen.context(source=a, compatible=False)
        assert all(v != 0 for v in m.target.lambdas)
        assert len(incompatible_blocks(m)) == 1
        assert compatibility_verdicts(m) == {1: False, 2: False, 3: False}


def test_compatibility_closed_under_compose_and_invert(gen) -> None:
    for _ in range(50):
        m1 = gen.context(compatible=True)
        m2 = gen.context(source=m1.target, compatible=True)
        assert check_compatible(compose(m2, m1), 1)
        assert check_compatible(invert(m1), 1)


def test_context_morphism_examples() -> None:
    m = _single(2)
    assert check_context_morphism(m, m, identity_morphism(m))
    assert check_context_morphism(m, _single(2), MoritaMorphism((3,), ("1/3",)))
    assert not check_context_morphism(m, _single(2), MoritaMorphism((3,), (1,)))


def test_context_morphism_needs_equal_perms() -> None:
    s = SemisimpleSkeleton((1, 1))
    m = identity_context(s)
    swapped = MoritaContext(s, s, (1, 0), (1, 1), (1, 1))
    with pytest.raises(PermMismatch):
        check_context_morphism(m, swapped, identity_morphism(m))
    with pytest.raises(ShapeMismatch):
        check_context_morphism(m, m, MoritaMorphism((1,), (1,)))


def test_morphism_from_f_exists_when_squares_agree(gen) -> None:
    for _ in range(50):
        m = gen.context()
        other = MoritaContext(m.source, m.target, m.perm, tuple(-e for e in m.eps), tuple(-e for e in m.eps))
        phi = morphism_from_f(m, other, gen.scalars(m.r))
        assert check_context_morphism(m, other, phi)
        assert check_context_morphism(other, m, invert_morphism(phi))
        assert check_context_morphism(m, m, compose_morphisms(invert_morphism(phi), phi))
