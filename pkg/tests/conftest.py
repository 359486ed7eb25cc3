from fractions import Fraction

import pytest

from tropcount.tropical.lattice import LatticePoint, LatticePolygon
from tropcount.tropical.tropcurve import (
    NewtonSubdivision,
    TropicalCurve,
    curve_from_subdivision,
    lower_hull_cells,
)

F = Fraction


def _heights(table):
    return {LatticePoint(*p): F(v) for p, v in table.items()}


# x^2 + xy + y^2 on the lattice points of the cubic triangle, the lifting of a smooth cubic
SMOOTH_CUBIC = {
    (0, 0): 0, (1, 0): 1, (2, 0): 4, (3, 0): 9,
    (0, 1): 1, (1, 1): 3, (2, 1): 7,
    (0, 2): 4, (1, 2): 7,
    (0, 3): 9,
}

# lowering (0, 0) merges two triangles into the unit square: one transverse crossing
CROSSING_CUBIC = {**SMOOTH_CUBIC, (0, 0): -1}

# (1, 1) left out; the segment (0,1)-(2,1) becomes an edge of weight 2
WEIGHT2_CUBIC = {
    (0, 0): 0, (1, 0): F(5, 4), (2, 0): F(9, 2), (3, 0): 9,
    (0, 1): 1, (2, 1): 7,
    (0, 2): F(9, 2), (1, 2): F(29, 4),
    (0, 3): 9,
}

# (1, 1) left out; the triangle (0,1), (2,0), (1,2) of doubled area 3 is a cell
MULT3_CUBIC = {
    (0, 0): 0, (1, 0): F(3, 2), (2, 0): 4, (3, 0): 9,
    (0, 1): 1, (2, 1): F(15, 2),
    (0, 2): F(9, 2), (1, 2): 7,
    (0, 3): 9,
}


def subdivision(polygon, table):
    lifting = _heights(table)
    return NewtonSubdivision(polygon, lower_hull_cells(lifting, lifting), lifting)


@pytest.fixture
def unit_triangle() -> LatticePolygon:
    return LatticePolygon.simplex(1)


@pytest.fixture
def unit_square() -> LatticePolygon:
    return LatticePolygon.rectangle(1, 1)


@pytest.fixture
def cubic() -> LatticePolygon:
    return LatticePolygon.simplex(3)


@pytest.fixture
def line_curve(unit_triangle) -> TropicalCurve:
    return curve_from_subdivision(subdivision(unit_triangle, {(0, 0): 0, (1, 0): 0, (0, 1): 0}))


@pytest.fixture
def smooth_cubic(cubic) -> TropicalCurve:
    return curve_from_subdivision(subdivision(cubic, SMOOTH_CUBIC))


@pytest.fixture
def crossing_cubic(cubic) -> TropicalCurve:
    return curve_from_subdivision(subdivision(cubic, CROSSING_CUBIC))


@pytest.fixture
def weight2_cubic(cubic) -> TropicalCurve:
    return curve_from_subdivision(subdivision(cubic, WEIGHT2_CUBIC))


@pytest.fixture
def weight2_marked_cubic(cubic) -> TropicalCurve:
    # the weight-2 edge is the vertical segment x = -3, -13/4 < y < -11/4
    seg = (LatticePoint(0, 1), LatticePoint(2, 1))
    return curve_from_subdivision(subdivision(cubic, WEIGHT2_CUBIC), [((F(-3), F(-3)), seg)])


@pytest.fixture
def mult3_cubic(cubic) -> TropicalCurve:
    return curve_from_subdivision(subdivision(cubic, MULT3_CUBIC))


@pytest.fixture
def polygon_file(tmp_path):
    """Write a polygon JSON file and return its path"""

    def write(polygon: LatticePolygon, name: str = "polygon.json"):
        import json

        fname = tmp_path / name
        fname.write_text(json.dumps(polygon.to_json()))
        return fname

    return write
