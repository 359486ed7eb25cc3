from fractions import Fraction

import pytest

from tropcount.errors import ClassificationError, DomainError, RegularityError, ValidationError
from tropcount.tropical.lattice import LatticePoint, LatticePolygon
from tropcount.tropical.tropcurve import (
    CurveEdge,
    FaceCensus,
    NewtonSubdivision,
    TropicalCurve,
    check_balanced,
    check_degree,
    curve_from_subdivision,
    curve_genus,
    dual_subdivision,
    face_census,
    lower_hull_cells,
    make_marking,
    validate_curve,
    vertex_multiplicity,
)

P = LatticePoint


def star(*rays):
    """One vertex at the origin with the given (direction, weight) rays"""
    return TropicalCurve([(0, 0)], [CurveEdge((0, None), w, P(*d)) for d, w in rays])


def test_line(line_curve, unit_triangle):
    assert line_curve.vertices == ((0, 0),)
    assert {tuple(line_curve.edges[k].direction) for k in line_curve.rays()} == {
        (0, 1),
        (1, 0),
        (-1, -1),
    }
    assert check_degree(line_curve, unit_triangle) == {}
    assert curve_genus(line_curve) == 0


def test_unbalanced_vertex():
    curve = star(((1, 0), 1), ((0, 1), 1), ((-1, -1), 2))
    violations = check_balanced(curve)
    assert len(violations) == 1
    assert violations[0].residual == P(-1, -1)
    assert violations[0].to_json() == {"vertex": 0, "residual": [-1, -1]}


def test_square_with_one_raised_corner(unit_square):
    lifting = {P(0, 0): 0, P(1, 0): 0, P(0, 1): 0, P(1, 1): 1}
    sub = NewtonSubdivision(unit_square, lower_hull_cells(lifting, lifting), lifting)
    curve = curve_from_subdivision(sub)
    assert len(curve.bounded_edges()) == 1
    assert len(curve.rays()) == 4
    assert set(curve.vertices) == {(0, 0), (-1, -1)}
    assert check_degree(curve, unit_square) == {}
    assert curve_genus(curve) == 0


def test_lifting_must_induce_the_cells(unit_square):
    lifting = {(0, 0): 0, (1, 0): 0, (0, 1): 0, (1, 1): 1}
    other_diagonal = [[(0, 0), (1, 0), (1, 1)], [(0, 0), (1, 1), (0, 1)]]
    sub = NewtonSubdivision(unit_square, other_diagonal, lifting)
    assert not sub.is_regular()
    with pytest.raises(RegularityError) as exc:
        curve_from_subdivision(sub)
    assert "cells" in exc.value.to_dict()


def test_cells_must_cover_the_polygon(unit_square):
    with pytest.raises(ValidationError):
        NewtonSubdivision(
            unit_square, [[(0, 0), (1, 0), (0, 1)]], {(0, 0): 0, (1, 0): 0, (0, 1): 0}
        )


def test_smooth_cubic(smooth_cubic, cubic):
    assert len(smooth_cubic.vertices) == 9
    assert len(smooth_cubic.bounded_edges()) == 9
    assert curve_genus(smooth_cubic) == 1
    assert validate_curve(smooth_cubic, cubic, genus=1) == []
    census = face_census(smooth_cubic, 0)
    assert census.case_id == "Smooth"
    assert census.counts == FaceCensus.expected_counts("Smooth", 9, 1)


def test_wrong_genus_is_reported(smooth_cubic, cubic):
    assert validate_curve(smooth_cubic, cubic, genus=0) == [
        {"problem": "genus", "expected": 0, "found": 1}
    ]


def test_degree_mismatch_is_reported(line_curve):
    problems = validate_curve(line_curve, LatticePolygon.simplex(2))
    assert [p["problem"] for p in problems] == [
        "degree",
        "dual polygon differs from the requested polygon",
    ]


def test_crossing_cubic(crossing_cubic):
    census = face_census(crossing_cubic, 1)
    assert census.case_id == "FourValent"
    assert census.counts == {"bounded": 8, "unbounded": 9, "trivalent": 7, "fourvalent": 1}
    assert census.counts == FaceCensus.expected_counts("FourValent", 9, 1)
    assert crossing_cubic.is_crossing(census.special[0])
    assert curve_genus(crossing_cubic) == 0


def test_weight2_cubic(weight2_cubic, weight2_marked_cubic):
    census = face_census(weight2_cubic, 1)
    assert census.case_id == "Weight2Unmarked"
    assert census.counts == {
        "bounded_wt1": 5,
        "unbounded": 9,
        "vertices_off": 5,
        "vertices_on": 2,
        "wt2_edge": 1,
    }
    assert weight2_cubic.edges[census.special[0]].weight == 2

    marked = face_census(weight2_marked_cubic, 1)
    assert marked.case_id == "Weight2Marked"
    assert marked.counts == FaceCensus.expected_counts("Weight2Marked", 9, 1)
    assert weight2_marked_cubic.marked_edges() == {census.special[0]}


def test_mult3_cubic(mult3_cubic):
    census = face_census(mult3_cubic, 1)
    assert census.case_id == "Mult3Vertex"
    assert census.counts == FaceCensus.expected_counts("Mult3Vertex", 9, 1)
    assert vertex_multiplicity(mult3_cubic, census.special[0]) == 3
    assert curve_genus(mult3_cubic) == 0


def test_classification_failures(smooth_cubic, crossing_cubic):
    with pytest.raises(ClassificationError):
        face_census(smooth_cubic, 1)
    with pytest.raises(ClassificationError):
        face_census(crossing_cubic, 0)
    with pytest.raises(DomainError):
        face_census(smooth_cubic, 2)


def test_expected_counts_domain():
    with pytest.raises(DomainError):
        FaceCensus.expected_counts("Weight2Marked", 4, 0)
    with pytest.raises(DomainError):
        FaceCensus.expected_counts("Cusp", 9, 1)


def test_genus_needs_a_simple_curve():
    curve = star(((1, 0), 1), ((0, 1), 1), ((-1, 1), 1), ((0, -1), 2))
    assert check_balanced(curve) == []
    assert not curve.is_crossing(0)
    with pytest.raises(DomainError):
        curve_genus(curve)


def test_dual_subdivision_is_recovered(crossing_cubic, mult3_cubic):
    for curve in (crossing_cubic, mult3_cubic):
        assert dual_subdivision(curve) == list(curve.dual.cells)


def test_marking_must_lie_inside_its_edge(weight2_cubic):
    edge = face_census(weight2_cubic, 1).special[0]
    marking = make_marking(weight2_cubic, (Fraction(-3), Fraction(-3)), edge)
    assert 0 < marking.parameter
    with pytest.raises(ValidationError):
        make_marking(weight2_cubic, (Fraction(-3), Fraction(0)), edge)
    with pytest.raises(ValidationError):
        make_marking(weight2_cubic, (Fraction(0), Fraction(0)), len(weight2_cubic.edges))


def test_json_keeps_the_curve(weight2_marked_cubic):
    rebuilt = TropicalCurve.from_json(weight2_marked_cubic.to_json())
    assert rebuilt.key() == weight2_marked_cubic.key()
    assert rebuilt.vertices == weight2_marked_cubic.vertices
    assert rebuilt.edges == weight2_marked_cubic.edges


def test_malformed_curve_json():
    with pytest.raises(ValidationError):
        TropicalCurve.from_json({"vertices": [[0, 0]]})
    with pytest.raises(ValidationError):
        TropicalCurve.from_json([1, 2])
