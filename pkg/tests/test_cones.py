import random

from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import fm_in_cone, fm_same_cone, random_cone_gens

from hartogs_fans import exactlin as el
from hartogs_fans.cones import (
    Cone,
    cone_from_generators,
    cone_from_inequalities,
    contains,
    dim,
    dual_cone,
    faces_of,
    halfspace,
    in_relative_interior,
    intersect,
    is_face,
    is_whole_space,
    lineality_dim,
    relative_interior_point,
)

Q1 = cone_from_generators(2, [(1, 0), (0, 1)])
PLANE = cone_from_generators(2, [(1, 0), (-1, 0), (0, 1), (0, -1)])
RAY = cone_from_generators(2, [(1, 0)])


def test_generator_examples():
    assert Q1.generators == ((0, 1), (1, 0))
    assert cone_from_generators(2, []).is_zero
    assert cone_from_generators(2, [(2, 0), (1, 0)]).generators == ((1, 0),)


def test_dual_examples():
    assert dual_cone(Q1) == Q1
    assert dual_cone(PLANE).is_zero
    assert set(dual_cone(RAY).generators) == {(1, 0), (0, 1), (0, -1)}


def test_whole_space_examples():
    assert is_whole_space(PLANE)
    assert not is_whole_space(Q1)
    assert is_whole_space(cone_from_generators(2, [(1, 0), (-1, 1), (-1, -1)]))


def test_contains_examples():
    assert contains(Q1, (1, 1))
    assert not contains(Q1, (-1, 0))
    assert contains(halfspace((0, 1)), (5, 0))


def test_dim_examples():
    assert (dim(RAY), lineality_dim(RAY)) == (1, 0)
    line = cone_from_generators(2, [(1, 0), (-1, 0)])
    assert (dim(line), lineality_dim(line)) == (1, 1)
    assert (dim(Cone.zero(2)), lineality_dim(Cone.zero(2))) == (0, 0)


def test_relative_interior_examples():
    assert relative_interior_point(Q1) == (1, 1)
    assert relative_interior_point(RAY) == (1, 0)
    c = cone_from_generators(2, [(1, 0), (1, 1), (0, 1)])
    p = relative_interior_point(c)
    assert all(el.dot(h, p) > 0 for h in c.facets)


def test_intersect_examples():
    left = halfspace((-1, 0))
    assert intersect(Q1, left).generators == ((0, 1),)
    assert intersect(Q1, Q1) == Q1
    assert intersect(Q1, cone_from_generators(2, [(-1, 0), (0, -1)])).is_zero


def test_face_examples():
    assert is_face(RAY, Q1)
    assert not is_face(cone_from_generators(2, [(1, 1)]), Q1)
    assert is_face(Cone.zero(2), Q1)


def test_faces_of_square_cone():
    c = cone_from_generators(3, [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)])
    by_dim = sorted(dim(f) for f in faces_of(c))
    assert by_dim == [0, 1, 1, 1, 1, 2, 2, 2, 2, 3]


def test_inequality_round_trip():
    c = cone_from_inequalities(3, [(1, 0, 0), (0, 1, 0)])
    assert lineality_dim(c) == 1
    assert cone_from_inequalities(3, c.inequalities) == c


def test_dual_dual_and_fm_random():
    rng = random.Random(7)
    for _ in range(60):
        rank, gens = random_cone_gens(rng, max_rank=4)
        c = cone_from_generators(rank, gens)
        assert dual_cone(dual_cone(c)) == c
        assert fm_same_cone(rank, gens, c)


vectors3 = st.lists(st.tuples(*[st.integers(-4, 4)] * 3), max_size=5)


@settings(max_examples=60, deadline=None)
@given(vectors3, st.tuples(*[st.integers(-4, 4)] * 3))
def test_contains_matches_fm(gens, v):
    assert contains(cone_from_generators(3, gens), v) == fm_in_cone(v, gens)


@settings(max_examples=60, deadline=None)
@given(vectors3)
def test_canonical_form_is_order_free(gens):
    a = cone_from_generators(3, gens)
    b = cone_from_generators(3, list(reversed(gens)) + [tuple(2 * x for x in g) for g in gens])
    assert a == b


@settings(max_examples=60, deadline=None)
@given(vectors3)
def test_relint_point_is_interior(gens):
    c = cone_from_generators(3, gens)
    if c.is_zero:
        return
    p = relative_interior_point(c)
    assert in_relative_interior(c, p)
    assert lineality_dim(c) <= dim(c)


@settings(max_examples=60, deadline=None)
@given(vectors3)
def test_whole_space_iff_dual_zero(gens):
    c = cone_from_generators(3, gens)
    assert is_whole_space(c) == dual_cone(c).is_zero
