"""Lattice polygons: lattice-point counts, Pick data and degree directions

All arithmetic in this module is exact integer arithmetic. numpy is used with integer dtypes
only.
"""

from typing import Any, Dict, Iterator, List, NamedTuple, Sequence, Tuple

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from tropcount.errors import ConsistencyError, PolygonError


class LatticePoint(NamedTuple):
    """Point of the integer lattice"""

    x: int
    y: int

    def __add__(self, other: Any) -> "LatticePoint":  # type: ignore[override]
        return LatticePoint(self.x + other[0], self.y + other[1])

    def __sub__(self, other: Any) -> "LatticePoint":
        return LatticePoint(self.x - other[0], self.y - other[1])

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(-self.x, -self.y)


def cross(u: Sequence[Any], v: Sequence[Any]) -> Any:
    """z-component of the cross product of two plane vectors"""
    return u[0] * v[1] - u[1] * v[0]


def turn(a: Sequence[Any], b: Sequence[Any], c: Sequence[Any]) -> Any:
    """Signed doubled area of the triangle abc (positive for a left turn at b)"""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def lattice_length(u: Sequence[int]) -> int:
    """Number of primitive steps in the integer vector u"""
    return math.gcd(abs(int(u[0])), abs(int(u[1])))


def primitive(u: Sequence[int]) -> LatticePoint:
    """Primitive integer vector pointing along u

    >>> primitive((4, -6))
    LatticePoint(x=2, y=-3)
    """
    g = lattice_length(u)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return LatticePoint(int(u[0]) // g, int(u[1]) // g)


def convex_hull(points: Sequence[Sequence[int]]) -> List[LatticePoint]:
    """Corners of the convex hull, counterclockwise, starting at the lexicographic minimum

    Collinear boundary points are not corners.

    >>> convex_hull([(0, 0), (2, 0), (1, 0), (0, 2), (1, 1)])
    [LatticePoint(x=0, y=0), LatticePoint(x=2, y=0), LatticePoint(x=0, y=2)]
    """
    pts = sorted(set(LatticePoint(int(p[0]), int(p[1])) for p in points))
    if len(pts) <= 2:
        return pts

    lower: List[LatticePoint] = []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[LatticePoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)

    return lower[:-1] + upper[:-1]


class LatticePolygon:
    """Convex lattice polygon

    Vertices are stored counterclockwise starting at the lexicographic minimum, so that two
    polygons with the same vertex set compare (and hash) equal regardless of the input order
    or orientation.

    Parameters
    ----------
    vertices : `sequence`
        Integer pairs in counterclockwise or clockwise order

    Raises
    ------
    PolygonError
        If there are fewer than three vertices, a coordinate is not an integer, the area is zero
        or three consecutive vertices are collinear or turn the wrong way
    """

    def __init__(self, vertices: Sequence[Sequence[Any]]) -> None:

        if len(vertices) < 3:
            raise PolygonError("a polygon needs at least 3 vertices", at=len(vertices))

        pts: List[LatticePoint] = []
        for k, v in enumerate(vertices):
            if len(v) != 2:
                raise PolygonError(f"vertex {k} must have two coordinates", at=k)
            coords = []
            for c in v:
                if isinstance(c, bool) or not float(c).is_integer():
                    raise PolygonError(f"vertex {k} has a non-integer coordinate", at=k)
                coords.append(int(c))
            pts.append(LatticePoint(*coords))

        n = len(pts)
        doubled = sum(cross(pts[k], pts[(k + 1) % n]) for k in range(n))
        if doubled == 0:
            raise PolygonError("polygon has zero area", at=0)

        order = list(range(n))
        if doubled < 0:
            order.reverse()

        for pos in range(n):
            i, j, k = order[pos - 1], order[pos], order[(pos + 1) % n]
            t = turn(pts[i], pts[j], pts[k])
            if t <= 0:
                kind = "collinear" if t == 0 else "reflex"
                raise PolygonError(
                    f"vertices ({i}, {j}, {k}) are {kind}: polygon is not strictly convex", at=j
                )

        ccw = [pts[i] for i in order]
        # all turns positive but winding more than once: some vertex falls outside an edge
        arr = np.array(ccw, dtype=np.int64)
        edges = np.roll(arr, -1, axis=0) - arr
        rel = arr[None, :, :] - arr[:, None, :]
        side = edges[:, None, 0] * rel[:, :, 1] - edges[:, None, 1] * rel[:, :, 0]
        if (side < 0).any():
            bad = int(np.argwhere(side < 0)[0][1])
            raise PolygonError("polygon winds around more than once", at=order[bad])

        start = min(range(n), key=lambda k: ccw[k])
        self.vertices: Tuple[LatticePoint, ...] = tuple(ccw[start:] + ccw[:start])

    @classmethod
    def simplex(cls, k: int = 1) -> "LatticePolygon":
        """Dilated standard triangle k*conv{(0,0), (1,0), (0,1)}"""
        return cls([(0, 0), (k, 0), (0, k)])

    @classmethod
    def rectangle(cls, a: int, b: int) -> "LatticePolygon":
        """Rectangle [0,a] x [0,b]"""
        return cls([(0, 0), (a, 0), (a, b), (0, b)])

    @classmethod
    def from_json(cls, data: Any) -> "LatticePolygon":
        """Build a polygon from {"vertices": [[x, y], ...]}"""
        if not isinstance(data, dict) or "vertices" not in data:
            raise PolygonError("polygon JSON must be an object with a `vertices` list", at=-1)
        vertices = data["vertices"]
        if not isinstance(vertices, list):
            raise PolygonError("`vertices` must be a list", at=-1)
        for k, v in enumerate(vertices):
            if not isinstance(v, (list, tuple)):
                raise PolygonError(f"vertex {k} must be a pair of integers", at=k)
        return cls(vertices)

    def to_json(self) -> Dict[str, Any]:
        return {"vertices": [[v.x, v.y] for v in self.vertices]}

    def key(self) -> str:
        """Canonical text key, used for hashing and cache names"""
        return ";".join(f"{v.x},{v.y}" for v in self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticePolygon):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"LatticePolygon({[tuple(v) for v in self.vertices]})"

    def edges(self) -> Iterator[Tuple[LatticePoint, LatticePoint]]:
        """Edges as (start, end) pairs in counterclockwise order"""
        n = len(self.vertices)
        for k in range(n):
            yield self.vertices[k], self.vertices[(k + 1) % n]

    @cached_property
    def doubled_area(self) -> int:
        n = len(self.vertices)
        return sum(cross(self.vertices[k], self.vertices[(k + 1) % n]) for k in range(n))

    @cached_property
    def _point_table(self) -> Tuple[np.ndarray, np.ndarray]:
        """Lattice points of the bounding box and their minimal edge-side value"""

        arr = np.array(self.vertices, dtype=np.int64)
        (xmin, ymin), (xmax, ymax) = arr.min(axis=0), arr.max(axis=0)
        xs, ys = np.mgrid[xmin : xmax + 1, ymin : ymax + 1]
        grid = np.stack([xs.ravel(), ys.ravel()], axis=1)

        starts = arr
        vecs = np.roll(arr, -1, axis=0) - arr
        rel = grid[None, :, :] - starts[:, None, :]
        side = vecs[:, None, 0] * rel[:, :, 1] - vecs[:, None, 1] * rel[:, :, 0]

        return grid, side.min(axis=0)

    @cached_property
    def _points(self) -> Tuple[LatticePoint, ...]:
        grid, margin = self._point_table
        inside = grid[margin >= 0]
        return tuple(sorted(LatticePoint(int(x), int(y)) for x, y in inside))

    def lattice_points(self) -> Tuple[LatticePoint, ...]:
        """All lattice points of the polygon, sorted lexicographically"""
        return self._points

    def interior_points(self) -> Tuple[LatticePoint, ...]:
        grid, margin = self._point_table
        return tuple(sorted(LatticePoint(int(x), int(y)) for x, y in grid[margin > 0]))

    def boundary_points(self) -> Tuple[LatticePoint, ...]:
        grid, margin = self._point_table
        return tuple(sorted(LatticePoint(int(x), int(y)) for x, y in grid[margin == 0]))

    def _sides(self, p: Sequence[Any]) -> List[Any]:
        return [turn(a, b, p) for a, b in self.edges()]

    def contains(self, p: Sequence[Any]) -> bool:
        """True if p lies in the closed polygon (p may be rational)"""
        return min(self._sides(p)) >= 0

    def on_boundary(self, p: Sequence[Any]) -> bool:
        return min(self._sides(p)) == 0

    def width(self) -> int:
        """Horizontal extent max x - min x"""
        xs = [v.x for v in self.vertices]
        return max(xs) - min(xs)

    def height(self) -> int:
        ys = [v.y for v in self.vertices]
        return max(ys) - min(ys)

    def dilate(self, k: int) -> "LatticePolygon":
        return LatticePolygon([(k * v.x, k * v.y) for v in self.vertices])


@dataclass(frozen=True)
class PolygonStats:
    """Lattice-point bookkeeping of a polygon

    `total_points` is n+1, `interior_points` is the genus g of a general curve, `doubled_area`
    is A and `boundary_length` the lattice perimeter.
    """

    total_points: int
    interior_points: int
    doubled_area: int
    boundary_length: int

    def to_json(self) -> Dict[str, int]:
        return {
            "total_points": self.total_points,
            "interior_points": self.interior_points,
            "doubled_area": self.doubled_area,
            "boundary_length": self.boundary_length,
        }


def polygon_stats(polygon: LatticePolygon) -> PolygonStats:
    """Count lattice points of a polygon and check them against Pick's formula

    Parameters
    ----------
    polygon : `LatticePolygon`
        A validated polygon

    Returns
    -------
    stats : `PolygonStats`

    Examples
    --------
    >>> polygon_stats(LatticePolygon.simplex(3))
    PolygonStats(total_points=10, interior_points=1, doubled_area=9, boundary_length=9)
    """

    boundary = sum(lattice_length(b - a) for a, b in polygon.edges())
    total = len(polygon.lattice_points())
    interior = len(polygon.interior_points())
    stats = PolygonStats(
        total_points=total,
        interior_points=interior,
        doubled_area=polygon.doubled_area,
        boundary_length=boundary,
    )

    if stats.doubled_area != 2 * interior + boundary - 2 or total != interior + boundary:
        raise ConsistencyError(f"lattice-point counts violate Pick's formula: {stats}")

    return stats


def degree_directions(polygon: LatticePolygon) -> Dict[LatticePoint, int]:
    """Primitive inner normals of the edges with their lattice lengths

    These are the directions, with multiplicity, of the unbounded edges of a tropical curve of
    degree `polygon`.

    Examples
    --------
    >>> degree_directions(LatticePolygon.simplex(1))
    {LatticePoint(x=0, y=1): 1, LatticePoint(x=-1, y=-1): 1, LatticePoint(x=1, y=0): 1}
    """

    directions: Dict[LatticePoint, int] = {}
    for a, b in polygon.edges():
        e = b - a
        # counterclockwise edge: the interior lies to the left
        normal = primitive((-e.y, e.x))
        directions[normal] = directions.get(normal, 0) + lattice_length(e)

    return directions
