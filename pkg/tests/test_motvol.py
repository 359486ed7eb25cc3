import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropcount.errors import DomainError, ValidationError
from tropcount.tropical.motvol import (
    CellDatum,
    PolyhedronDescriptor,
    StratumDatum,
    cell_volume,
    chi_prime,
    complex_volume,
    semistable_chi_y,
    semistable_volume,
    volume_from_json,
)
from tropcount.tropical.ringkit import HalfLaurent, MotivicClass

L = MotivicClass.L()
y = HalfLaurent.y()


def line_cells():
    """A general line in the torus: one vertex and three rays"""
    vertex = CellDatum(L - 2, dim=0, rec_dim=0)
    ray = CellDatum(MotivicClass.L_minus_one(), dim=1, rec_dim=1)
    return [vertex, ray, ray, ray]


@given(st.integers(min_value=0, max_value=12))
def test_chi_prime_bounded(dim):
    assert chi_prime(PolyhedronDescriptor(dim, bounded=True)) == (-1) ** dim


@given(st.integers(min_value=1, max_value=12), st.booleans())
def test_chi_prime_unbounded(dim, affine):
    expected = 1 if affine else 0
    assert chi_prime(PolyhedronDescriptor(dim, bounded=False, affine_subspace=affine)) == expected


def test_invalid_polyhedra():
    with pytest.raises(DomainError):
        PolyhedronDescriptor(-1, bounded=True)
    with pytest.raises(DomainError):
        PolyhedronDescriptor(2, bounded=True, affine_subspace=True)


def test_recession_dimension_is_checked():
    with pytest.raises(DomainError):
        CellDatum(L, dim=1, rec_dim=2)


def test_closure_of_a_line_is_a_projective_line():
    volume = complex_volume(line_cells(), "closure")
    assert volume.loc_power == 0
    assert volume == L + 1
    assert volume.euler() == 2


def test_bounded_cells_give_the_open_line():
    volume = complex_volume(line_cells(), "bounded_cell")
    assert volume == L - 2
    assert volume.chi_y() == y - 2
    assert volume.euler() == -1


def test_stratum_variant():
    cell = CellDatum(MotivicClass.const(1), dim=2, rec_dim=0)
    assert cell_volume(cell, "stratum") == MotivicClass({0: 1, 1: -2, 2: 1})


def test_unknown_variant():
    with pytest.raises(DomainError):
        cell_volume(line_cells()[0], "open")


def test_two_component_cycle_has_zero_volume():
    # two rational components meeting in two points
    strata = [
        StratumDatum(MotivicClass.L_minus_one(), 1),
        StratumDatum(MotivicClass.L_minus_one(), 1),
        StratumDatum(MotivicClass.const(1), 2),
        StratumDatum(MotivicClass.const(1), 2),
    ]
    assert semistable_volume(strata).is_zero()
    assert semistable_chi_y(strata) == 0


def test_genus_two_degenerating_to_elliptic_curves():
    strata = [
        StratumDatum(MotivicClass.curve(1, punctures=1), 1),
        StratumDatum(MotivicClass.curve(1, punctures=1), 1),
        StratumDatum(MotivicClass.const(1), 2),
    ]
    assert semistable_chi_y(strata) == -(y + 1)
    assert semistable_volume(strata).chi_y() == MotivicClass.curve(2).chi_y()


def test_stratum_depth_is_positive():
    with pytest.raises(DomainError):
        StratumDatum(L, 0)


def test_volume_document():
    report = volume_from_json(
        {"variant": "closure", "cells": [cell.to_json() for cell in line_cells()]}
    )
    assert report["cells"] == 4
    assert report["volume_str"] == "L + 1"
    assert report["chi_y_str"] == "1 + y"
    assert report["euler"] == 2
    assert MotivicClass.from_json(report["volume"]) == L + 1


def test_malformed_volume_documents():
    with pytest.raises(ValidationError):
        volume_from_json({"variant": "closure"})
    with pytest.raises(ValidationError):
        volume_from_json({"cells": [{"dim": 0, "rec_dim": 0}]})
    with pytest.raises(DomainError):
        volume_from_json({"variant": "bogus", "cells": [line_cells()[0].to_json()]})
