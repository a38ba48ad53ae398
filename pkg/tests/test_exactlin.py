from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hartogs_fans import exactlin as el
from hartogs_fans.errors import DimensionMismatch, ZeroVector

small = st.integers(-6, 6)


def test_rank_examples():
    assert el.rank([[1, 0], [0, 1]]) == 2
    assert el.rank([[0, 0], [0, 0]]) == 0
    assert el.rank([[1, 2], [2, 4]]) == 1


def test_primitive_examples():
    assert el.primitive((Fraction(2, 3), Fraction(4, 3))) == (1, 2)
    assert el.primitive((-2, 0)) == (-1, 0)
    with pytest.raises(ZeroVector):
        el.primitive((0, 0))


def test_solve_membership_examples():
    assert el.solve_membership([[1, 0]], (2, 0)) == (2,)
    assert el.solve_membership([[1, 0]], (0, 1)) is None
    assert el.solve_membership([[1, 1], [1, -1]], (3, 1)) == (2, 1)


def test_to_rational_rejects_floats():
    with pytest.raises(TypeError):
        el.to_rational(0.5)
    with pytest.raises(TypeError):
        el.to_rational(True)
    assert el.to_rational("3/6") == Fraction(1, 2)


def test_dot_checks_length():
    with pytest.raises(DimensionMismatch):
        el.dot((1, 2), (1, 2, 3))


def test_format_rational():
    assert el.format_rational(Fraction(4, 2)) == 2
    assert el.format_rational(Fraction(-1, 3)) == "-1/3"


@given(st.lists(small, min_size=1, max_size=4).filter(any), st.integers(1, 5))
def test_primitive_scale_invariant(v, k):
    p = el.primitive(v)
    assert el.primitive([k * x for x in v]) == p
    assert el.rank([v, p]) == 1


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=0, max_size=4))
def test_nullspace_dimension(rows):
    ns = el.nullspace(rows, 3)
    assert len(ns) + el.rank(rows) == 3
    for n in ns:
        assert all(el.dot(r, n) == 0 for r in rows)


@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=1, max_size=5),
       st.lists(small, min_size=2, max_size=2))
def test_nonneg_combination_sound(gens, target):
    c = el.nonneg_combination(gens, target)
    if c is None:
        return
    assert all(q >= 0 for q in c)
    acc = [sum(q * g[i] for q, g in zip(c, gens)) for i in range(2)]
    assert acc == list(target)
