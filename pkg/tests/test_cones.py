"""Cone engine tests; Fourier-Motzkin is the independent oracle throughout."""
import random

import pytest

from zipcone import fm, linalg
from zipcone.cones import (
    RationalCone,
    cone_from_generators,
    cone_from_inequalities,
    whole_space,
)
from zipcone.errors import DimensionMismatch, DimensionTooLarge, SingularMap


def fm_cone(dim, gens):
    """The cone of the generators, via the Fourier-Motzkin route only."""
    h = fm.h_from_v(dim, gens)
    return cone_from_inequalities(dim, h) if h else whole_space(dim)


def test_first_quadrant_both_ways():
    c = cone_from_generators(2, [(1, 0), (0, 1)])
    assert set(c.inequalities) == {(1, 0), (0, 1)}
    c2 = cone_from_inequalities(2, [(1, 0), (0, 1)])
    assert set(c2.generators) == {(1, 0), (0, 1)}


def test_empty_inputs():
    assert whole_space(2).member((-100, 100))
    zero = cone_from_generators(3, [])
    assert zero.member((0, 0, 0)) and not zero.member((1, 0, 0))
    assert zero.rank() == 0


def test_wedge_matches_hand_computation():
    c = cone_from_generators(2, [(1, 1), (1, -1)])
    assert set(c.inequalities) == {(1, 1), (1, -1)}
    assert c.equal(fm_cone(2, [(1, 1), (1, -1)]))


def test_lineality_halfplane():
    c = cone_from_generators(2, [(1, 0), (-1, 0), (0, 1)])
    assert c.inequalities == ((0, 1),)
    assert c.lineality_basis() == ((1, 0),)
    assert c.equal(fm_cone(2, [(1, 0), (-1, 0), (0, 1)]))


def test_member_examples():
    c = cone_from_generators(2, [(1, 0), (0, 1)])
    assert c.member((0, 0))
    assert c.member((1, 1))
    assert not c.member((-1, 1))
    for g in c.generators:
        assert c.member(g)


def test_member_dimension_check():
    c = cone_from_generators(2, [(1, 0)])
    with pytest.raises(DimensionMismatch):
        c.member((1, 0, 0))


def test_contains_and_witness():
    quad = cone_from_generators(2, [(1, 0), (0, 1)])
    ray = cone_from_generators(2, [(1, 1)])
    assert quad.contains(ray)
    assert quad.contains(quad)
    half = cone_from_inequalities(2, [(1, 0)])
    bad = cone_from_generators(2, [(-1, 5)])
    assert not half.contains(bad)
    assert half.witness_outside(bad) == (-1, 5)


def test_intersect_equal_dim():
    plane = whole_space(2)
    c = cone_from_generators(2, [(2, 1), (0, 1)])
    assert c.intersect(plane).equal(c)
    line = cone_from_inequalities(2, [(1, 0)]).intersect(
        cone_from_inequalities(2, [(-1, 0)])
    )
    assert line.lineality_basis() == ((0, 1),)
    assert cone_from_generators(2, [(1, 0), (0, 1)]).rank() == 2


def test_image_under_identity_and_negation():
    c = cone_from_generators(2, [(1, 0), (0, 1)])
    assert c.image_under(linalg.mat_identity(2)).equal(c)
    neg = c.image_under(((-1, 0), (0, -1)))
    assert set(neg.generators) == {(-1, 0), (0, -1)}


def test_image_under_round_trip_invertible():
    rnd = random.Random(3)
    m = ((1, 2, 0), (0, 1, 0), (1, 1, 1))
    minv = linalg.mat_inverse(m)
    for _ in range(20):
        gens = [tuple(rnd.randint(-4, 4) for _ in range(3)) for _ in range(5)]
        c = cone_from_generators(3, gens)
        back = c.image_under(m).image_under(minv)
        assert back.equal(c)


def test_image_under_inequality_route():
    c = cone_from_generators(2, [(1, 0), (1, 1)])
    m = ((2, 1), (1, 1))
    via_gens = c.image_under(m)
    via_ineqs = c.complete().image_under(m, via="inequalities")
    assert via_gens.equal(via_ineqs)
    with pytest.raises(SingularMap):
        c.image_under(((1, 1), (1, 1)), via="inequalities")


def test_dimension_cap():
    with pytest.raises(DimensionTooLarge):
        cone_from_generators(13, [tuple([1] + [0] * 12)]).complete()


def test_mutual_validation_of_double_input():
    with pytest.raises(DimensionMismatch):
        RationalCone(2, generators=[(1, 0)], inequalities=[(-1, 0)]).complete()


def test_json_round_trip():
    c = cone_from_generators(3, [(1, 0, 0), (1, 1, 0), (-1, 0, 2)])
    data = c.to_json()
    c2 = RationalCone.from_json(data).complete()
    assert c2.equal(c)
    assert data == c2.to_json()


def test_random_round_trips_and_fm_agreement():
    rnd = random.Random(99)
    for _ in range(60):
        dim = rnd.randint(1, 5)
        gens = [
            tuple(rnd.randint(-3, 3) for _ in range(dim))
            for _ in range(rnd.randint(0, 7))
        ]
        c = cone_from_generators(dim, gens).complete()
        # V -> H -> V round trip is the same cone
        again = cone_from_inequalities(dim, c.inequalities)
        assert again.equal(c)
        assert c.equal(fm_cone(dim, gens))
        for g in gens:
            assert c.member(g)


def test_both_sides_must_describe_same_cone():
    # mutually satisfied but different cones: quadrant gens vs half-plane
    with pytest.raises(DimensionMismatch):
        RationalCone(2, generators=[(1, 0), (0, 1)], inequalities=[(0, 1)]).complete()
    # agreeing pair is accepted
    RationalCone(2, generators=[(1, 0), (0, 1)], inequalities=[(1, 0), (0, 1)]).complete()


def test_canonical_form_independent_of_route():
    # the same cone reaches one canonical json via either description
    gens_a = [(2, 1, 0), (1, 2, 0), (0, 0, 1), (3, 3, 1)]  # last is redundant
    gens_b = [(4, 2, 0), (1, 2, 0), (0, 0, 3), (1, 2, 3)]
    c1 = cone_from_generators(3, gens_a).complete()
    c2 = cone_from_generators(3, gens_b).complete()
    assert c1.equal(c2)
    assert c1.to_json() == c2.to_json()
    c3 = cone_from_inequalities(3, c1.inequalities).complete()
    assert c3.to_json() == c1.to_json()
