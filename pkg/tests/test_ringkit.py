import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropcount.errors import DomainError, NotInImageError, UnsupportedProductError
from tropcount.tropical.ringkit import HalfLaurent, MotivicClass, SeriesY

y = HalfLaurent.y()

laurents = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(HalfLaurent)


def test_pretty_printing():
    assert str(HalfLaurent.from_poly({-1: 1, 0: 10, 1: 1})) == "y^-1 + 10 + y"
    assert str(HalfLaurent.from_poly([1, -2, 1])) == "1 - 2*y + y^2"
    assert str(HalfLaurent({1: 1, -1: 1})) == "y^-1/2 + y^1/2"
    assert str(HalfLaurent()) == "0"


def test_specializations():
    total = HalfLaurent.from_poly({-1: 1, 0: 10, 1: 1})
    assert total.evaluate(1) == 12
    assert total.evaluate(-1) == 8


def test_half_integer_exponents_at_minus_one():
    with pytest.raises(DomainError):
        HalfLaurent({1: 1}).evaluate(-1)
    assert HalfLaurent({1: 1, -1: 1}).evaluate(1) == 2


def test_exact_division():
    assert (y - 1).divide_by_y_minus_one() == HalfLaurent.const(1)
    assert ((y - 1) ** 2 * (y + 3)).divide_by_y_minus_one(2) == y + 3
    with pytest.raises(NotInImageError):
        (y + 1).divide_by_y_minus_one()


def test_bar_and_symmetry():
    q = HalfLaurent.from_poly({-1: 1, 0: 2, 1: 1})
    assert q.is_symmetric()
    assert not (y + 1).is_symmetric()
    assert (y + 1).bar() == HalfLaurent.from_poly({-1: 1, 0: 1})


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    assert (a * b).evaluate(1) == a.evaluate(1) * b.evaluate(1)


@given(laurents)
def test_json_keeps_the_polynomial(a):
    assert HalfLaurent.from_json(a.to_json()) == a


def test_rational_curve_relation():
    assert MotivicClass.curve(0) == MotivicClass({1: 1, 0: 1})
    assert MotivicClass.curve(1, punctures=3) == MotivicClass.curve(1) - 3


def test_localization_is_removed_when_exact():
    cls = MotivicClass({2: 1, 1: -2, 0: 1}, loc_power=1).reduce()
    assert cls.loc_power == 0
    assert cls == MotivicClass.L_minus_one()


def test_chi_y_of_atoms():
    assert MotivicClass.curve(2).chi_y() == -(y + 1)
    assert MotivicClass.curve(1, punctures=3).chi_y() == HalfLaurent.const(-3)
    assert MotivicClass.L(2).chi_y() == y**2
    assert MotivicClass.curve(1).euler() == 0


def test_chi_y_outside_the_image():
    with pytest.raises(NotInImageError):
        MotivicClass({0: 1}, loc_power=1).chi_y()


def test_curve_atoms_do_not_multiply():
    with pytest.raises(UnsupportedProductError):
        MotivicClass.curve(1) * MotivicClass.curve(2)


def test_series_inverse():
    P = SeriesY([1, HalfLaurent.from_poly([-1, -1]), y], 0, 6)
    assert P * P.inverse() == SeriesY([1], 0, 6)


def test_series_inverse_needs_a_unit():
    with pytest.raises(DomainError):
        SeriesY([2, 1], 0, 4).inverse()
