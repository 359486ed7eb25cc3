import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropcount.errors import DomainError, TruncationError, ValidationError
from tropcount.tropical.ringkit import HalfLaurent
from tropcount.tropical.zeta import (
    ZetaInput,
    forward_series,
    functional_equation_check,
    hilbert_from_closed_form,
    invert_series,
    required_order,
    zeta_report,
)

y = HalfLaurent.y()

laurents = st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), max_size=3).map(
    HalfLaurent.from_poly
)


@st.composite
def families(draw):
    g = draw(st.integers(min_value=0, max_value=5))
    N = draw(st.lists(laurents, min_size=1, max_size=g + 1))
    order = required_order(g) + draw(st.integers(min_value=0, max_value=3))
    return g, N, order


@settings(max_examples=50, deadline=None)
@given(families())
def test_inversion_recovers_the_coefficients(family):
    g, N, order = family
    series = forward_series(N, g, order)
    recovered = invert_series(ZetaInput(g, series.coefficients, order))
    assert recovered == N + [HalfLaurent()] * (order - len(N))


@settings(max_examples=50, deadline=None)
@given(families())
def test_functional_equation_holds_up_to_genus(family):
    g, N, _ = family
    assert functional_equation_check(N, g)


def test_truncation_is_reported():
    with pytest.raises(TruncationError) as exc:
        invert_series(ZetaInput(2, (1, 2, 3), 3))
    assert exc.value.required_order == 6
    assert exc.value.to_dict()["required_order"] == 6


def test_functional_equation_failure():
    check = functional_equation_check([1, 1], 0)
    assert not check
    assert check.violation == (1, None)
    assert check.to_json()["violation"] == [1, None]


def test_nodal_genus_one_pencil():
    data = hilbert_from_closed_form("nodal_genus1", 1, 6)
    N = invert_series(data)
    assert N[:2] == [HalfLaurent.const(1), y]
    assert all(n.is_zero() for n in N[2:])


def test_smooth_curve_of_genus_two():
    data = hilbert_from_closed_form("smooth", 2, required_order(2))
    # P(q) = 1 - (1 + y) q + y q^2
    assert [str(h) for h in data.hilb_chi[:3]] == ["1", "-1 - y", "y"]
    N = invert_series(data)
    assert N[0] == 1
    assert all(n.is_zero() for n in N[1:])


def test_euler_variant():
    data = hilbert_from_closed_form("nodal_genus1", 1, 6)
    N = invert_series(data, variant="euler")
    assert [n.evaluate(1) for n in N] == [1, 1, 0, 0, 0, 0]


def test_closed_form_domain():
    with pytest.raises(DomainError):
        hilbert_from_closed_form("nodal_genus1", 2, 6)
    with pytest.raises(DomainError):
        hilbert_from_closed_form("cuspidal", 1, 6)
    with pytest.raises(DomainError):
        forward_series([1], 1, 4, variant="motivic")


def test_input_json():
    hilb = [1, [0, 1], {"half_exps": {"2": 1, "4": 1}}, 0]
    data = ZetaInput.from_json({"g": 1, "hilb_chi": hilb})
    assert data.order == 4
    assert data.hilb_chi[1] == y
    with pytest.raises(ValidationError):
        ZetaInput.from_json({"hilb_chi": [1]})
    with pytest.raises(ValidationError):
        ZetaInput.from_json({"g": 1, "hilb_chi": ["one"]})
    with pytest.raises(ValidationError):
        ZetaInput(1, (1, 2), order=4)


def test_report():
    report = zeta_report(hilbert_from_closed_form("nodal_genus1", 1, 4))
    assert report["N_str"] == ["1", "y", "0", "0"]
    assert report["determinable"] == [0, 3]
    assert report["functional_equation"]["holds"]
    assert "functional_equation" not in zeta_report(
        hilbert_from_closed_form("nodal_genus1", 1, 4), variant="euler"
    )
