import random
from fractions import Fraction

import pytest

from frobfix.algebra import decompose, group_algebra
from frobfix.algebra.groups import symmetric_group_table
from frobfix.cli.loaders import cycat_from_json, cycat_to_json
from frobfix.cycat import (
    CYCategory,
    CYFunctorData,
    CYMap,
    CYObject,
    check_cy_axioms,
    check_cy_functor,
    check_cy_functor_pairing,
    cy_from_fixed_point,
    fixed_point_from_cy,
    hs_trace,
    pairing_gram,
    rep_morphism,
    rep_object,
    rep_trace,
    trace_of,
)
from frobfix.cycat.category import (
    compose_functors,
    compose_maps,
    direct_sum,
    direct_sum_maps,
    endo,
    identity_map,
    random_map,
    subtract_maps,
    zero_map,
)
from frobfix.errors import FrobfixError, SchemaError, ShapeMismatch, SimpleCountMismatch
from frobfix.exactlin import RatMatrix, rank
from frobfix.fixedpoint import FixedPointObject
from frobfix.skeletal import FrobeniusAlgebra, MoritaContext, check_compatible, compose, identity_context


def _samples(r: int):
    return [CYObject.simple(r, i) for i in range(r)] + [CYObject(tuple(i % 2 + 1 for i in range(r)))]


def test_trace_of_examples() -> None:
    one = CYCategory((1,))
    c = CYObject((2,))
    assert trace_of(one, c, zero_map(c, c)) == 0
    assert trace_of(one, c, identity_map(c)) == 2

    cy = CYCategory(("1/6", "1/3"))
    d = CYObject((1, 2))
    assert trace_of(cy, d, identity_map(d)) == Fraction(5, 6)


def test_trace_of_needs_an_endomorphism() -> None:
    cy = CYCategory((1, 1))
    c, d = CYObject((1, 0)), CYObject((2, 0))
    with pytest.raises(ShapeMismatch):
        trace_of(cy, c, zero_map(c, d))
    with pytest.raises(ShapeMismatch):
        trace_of(CYCategory((1,)), c, identity_map(c))


def test_map_blocks_must_match_multiplicities() -> None:
    c = CYObject((1, 2))
    with pytest.raises(ShapeMismatch):
        endo(c, [RatMatrix.identity(1), RatMatrix.identity(1)])


def test_axioms_pass_for_nonzero_traces(gen) -> None:
    for _ in range(20):
        r = gen.rng.randint(1, 3)
        cy = CYCategory(tuple(gen.scalars(r)))
        assert check_cy_axioms(cy, _samples(r), seed=gen.rng.randint(0, 100)) == []


def test_planted_zero_trace_is_degenerate() -> None:
    cy = CYCategory((1, 0), allow_degenerate=True)
    findings = check_cy_axioms(cy, _samples(2))
    locations = {f.location for f in findings}
    assert "nondegeneracy(X1)" in locations
    assert "nondegeneracy(X^0,1,X^0,1)" in locations
    assert not any(loc.startswith(("cyclicity", "additivity")) for loc in locations)
    with pytest.raises(FrobfixError):
        CYCategory((1, 0))


def test_pairing_gram_rank_tracks_nonzero_traces() -> None:
    c, d = CYObject((1, 2)), CYObject((2, 1))
    gram = pairing_gram(CYCategory((2, -3)), c, d)
    assert gram.shape == (4, 4)
    assert rank(gram) == 4
    degenerate = pairing_gram(CYCategory((2, 0), allow_degenerate=True), c, d)
    assert rank(degenerate) == 2


def test_cyclicity_and_additivity() -> None:
    rng = random.Random(3)
    cy = CYCategory(("1/2", -2, 3))
    objects = [CYObject((1, 0, 2)), CYObject((2, 1, 1)), CYObject((0, 3, 1))]
    for c in objects:
        for d in objects:
            f, g = random_map(rng, c, d), random_map(rng, d, c)
            assert trace_of(cy, c, compose_maps(g, f)) == trace_of(cy, d, compose_maps(f, g))
            fc, fd = random_map(rng, c, c), random_map(rng, d, d)
            assert trace_of(cy, direct_sum(c, d), direct_sum_maps(fc, fd)) == trace_of(cy, c, fc) + trace_of(cy, d, fd)


def test_hs_trace_examples() -> None:
    a = FrobeniusAlgebra.of([1, 2], [1, 1])
    s1 = CYObject((1, 0))
    assert hs_trace(a, s1, zero_map(s1, s1)) == (0, 0)
    assert hs_trace(a, s1, identity_map(s1)) == (1, 0)
    module = CYObject((2, 1))
    f = endo(module, [RatMatrix.identity(2), RatMatrix.scalar(1, 3)])
    assert hs_trace(a, module, f) == (2, 3)
    with pytest.raises(ShapeMismatch):
        hs_trace(FrobeniusAlgebra.of([1], [1]), module, f)


def test_hs_trace_vanishes_on_commutators() -> None:
    rng = random.Random(11)
    a = FrobeniusAlgebra.of([1, 2, 1], [1, 2, 3])
    module = CYObject((2, 3, 1))
    for _ in range(10):
        f, g = random_map(rng, module, module), random_map(rng, module, module)
        commutator = subtract_maps(compose_maps(f, g), compose_maps(g, f))
        assert hs_trace(a, module, commutator) == (0, 0, 0)


def test_rep_object_examples() -> None:
    assert rep_object(FrobeniusAlgebra.of([2], [5])).traces == (5,)
    assert rep_object(FrobeniusAlgebra.of([1, 3], [1, 1])).traces == (1, 1)
    a, form = group_algebra(symmetric_group_table(3), 0)
    _, frob = decompose(a, form)
    assert rep_object(frob).traces == (Fraction(1, 6), Fraction(1, 6), Fraction(1, 3))


def test_rep_trace_is_lambda_of_hs_trace() -> None:
    a = FrobeniusAlgebra.of([1, 2], ["1/6", "1/3"])
    module = CYObject((2, 1))
    f = endo(module, [RatMatrix.from_rows([[1, 2], [3, 4]]), RatMatrix.scalar(1, 6)])
    assert rep_trace(a, module, f) == trace_of(rep_object(a), module, f) == Fraction(1, 6) * 5 + 2


def test_rep_morphism_examples() -> None:
    a = FrobeniusAlgebra.of([1, 1], [2, 3])
    assert rep_morphism(identity_context(a)) == CYFunctorData.identity(2)
    swap = MoritaContext(a, FrobeniusAlgebra.of([1, 1], [3, 2]), (1, 0), (1, 1), (1, 1))
    assert rep_morphism(swap).perm == (1, 0)
    back = MoritaContext(swap.target, a, (1, 0), (2, 2), (2, 2))
    assert rep_morphism(compose(back, swap)) == compose_functors(rep_morphism(back), rep_morphism(swap))


def test_check_cy_functor_examples() -> None:
    t12 = CYCategory((1, 2))
    assert check_cy_functor(t12, t12, CYFunctorData.identity(2))
    assert check_cy_functor(t12, CYCategory((2, 1)), CYFunctorData((1, 0)))
    assert not check_cy_functor(t12, CYCategory((1, 3)), CYFunctorData.identity(2))
    with pytest.raises(SimpleCountMismatch):
        check_cy_functor(t12, CYCategory((1,)), CYFunctorData.identity(2))


def test_functor_pairing_check() -> None:
    src = CYCategory((1, 2))
    samples = _samples(2) + [CYObject((0, 2)), CYObject((1, 3))]
    assert check_cy_functor_pairing(src, CYCategory((2, 1)), CYFunctorData((1, 0)), samples) == []
    assert check_cy_functor_pairing(src, CYCategory((1, 3)), CYFunctorData.identity(2), samples)


def test_compatibility_matches_cy_functor(gen) -> None:
    outcomes = set()
    for k in range(200):
        m = gen.context(compatible=(True, False, None)[k % 3])
        verdict = check_compatible(m, 3)
        assert verdict == check_cy_functor(rep_object(m.source), rep_object(m.target), rep_morphism(m))
        outcomes.add(verdict)
    assert outcomes == {True, False}


def test_fixed_point_and_cy_round_trip(gen) -> None:
    for _ in range(30):
        cy = CYCategory(tuple(gen.scalars(gen.rng.randint(1, 4))))
        assert cy_from_fixed_point(fixed_point_from_cy(cy)) == cy
    p = FixedPointObject(FrobeniusAlgebra.of([1, 2], ["1/2", 3]), (4, "1/3"))
    assert cy_from_fixed_point(p).traces == (2, 1)


def test_cycat_json() -> None:
    cy = cycat_from_json({"simples": 2, "traces": ["1/2", "3"]})
    assert cy.traces == (Fraction(1, 2), 3)
    assert cycat_to_json(cy) == {"simples": 2, "traces": ["1/2", "3"]}
    with pytest.raises(SchemaError):
        cycat_from_json({"simples": 3, "traces": ["1"]})


def test_maps_reject_mismatched_simples() -> None:
    with pytest.raises(SimpleCountMismatch):
        CYMap(CYObject((1,)), CYObject((1, 0)), (RatMatrix.identity(1),))
