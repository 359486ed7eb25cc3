"""Plane tropical curves and their dual Newton subdivisions

A curve is the corner locus of the concave function

    psi(p) = min_u ( <u, p> + phi(u) )

where phi is the lifting of the subdivision. The curve vertex dual to a cell sits at minus the
gradient of phi on that cell, and every edge points along the inner normal of its dual segment.
"""

from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from tropcount.errors import (
    ClassificationError,
    ConsistencyError,
    DomainError,
    RegularityError,
    ValidationError,
)
from tropcount.io.logging import logger
from tropcount.tropical.lattice import (
    LatticePoint,
    LatticePolygon,
    convex_hull,
    cross,
    degree_directions,
    lattice_length,
    primitive,
    turn,
)

RationalPoint = Tuple[Fraction, Fraction]
Cell = Tuple[LatticePoint, ...]
Segment = Tuple[LatticePoint, LatticePoint]

CASES = ("FourValent", "Weight2Marked", "Weight2Unmarked", "Mult3Vertex", "Smooth")

# smallest doubled area for which a case has nonnegative face counts
A_MIN = {"FourValent": 3, "Weight2Marked": 5, "Weight2Unmarked": 5, "Mult3Vertex": 3, "Smooth": 1}


def _frac(value: Any) -> Fraction:
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"`{value}` is not a rational number") from exc


def _point(value: Sequence[Any]) -> RationalPoint:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ValidationError(f"`{value}` is not a pair of coordinates")
    return (_frac(value[0]), _frac(value[1]))


def _lattice_point(value: Sequence[Any]) -> LatticePoint:
    x, y = _point(value)
    if x.denominator != 1 or y.denominator != 1:
        raise ValidationError(f"`{value}` is not a lattice point")
    return LatticePoint(int(x), int(y))


def _point_json(p: Sequence[Fraction]) -> List[str]:
    return [str(p[0]), str(p[1])]


def segment(a: Sequence[int], b: Sequence[int]) -> Segment:
    """Unordered lattice segment in canonical (sorted) form"""
    pa, pb = LatticePoint(a[0], a[1]), LatticePoint(b[0], b[1])
    return (pa, pb) if pa <= pb else (pb, pa)


def normalize_cell(corners: Iterable[Sequence[int]]) -> Cell:
    """Counterclockwise corner tuple starting at the lexicographic minimum"""
    hull = convex_hull(list(corners))
    if len(hull) < 3:
        raise ValidationError(f"cell {hull} is degenerate")
    return tuple(hull)


def cell_sides(cell: Cell) -> List[Tuple[LatticePoint, LatticePoint]]:
    """Directed sides of a counterclockwise cell"""
    return [(cell[k], cell[(k + 1) % len(cell)]) for k in range(len(cell))]


def cell_doubled_area(cell: Cell) -> int:
    return sum(cross(a, b) for a, b in cell_sides(cell))


def is_parallelogram(cell: Cell) -> bool:
    return len(cell) == 4 and cell[0] + cell[2] == cell[1] + cell[3]


class Plane:
    """Affine function z = c + p x + q y through three lifted points"""

    __slots__ = ("c", "p", "q")

    def __init__(self, points: Sequence[Sequence[int]], heights: Sequence[Fraction]) -> None:
        (x0, y0), (x1, y1), (x2, y2) = points[:3]
        d1x, d1y, d2x, d2y = x1 - x0, y1 - y0, x2 - x0, y2 - y0
        f1, f2 = heights[1] - heights[0], heights[2] - heights[0]
        det = d1x * d2y - d1y * d2x
        if det == 0:
            raise DomainError(f"points {list(points[:3])} are collinear")
        self.p = Fraction(f1 * d2y - f2 * d1y, det)
        self.q = Fraction(d1x * f2 - d2x * f1, det)
        self.c = Fraction(heights[0]) - self.p * x0 - self.q * y0

    def __call__(self, u: Sequence[Any]) -> Fraction:
        return self.c + self.p * u[0] + self.q * u[1]


def lower_hull_cells(
    points: Iterable[Sequence[int]], lifting: Mapping[LatticePoint, Any]
) -> List[Cell]:
    """Two-dimensional faces of the lower convex hull of the lifted points

    Exact and brute force: every non-collinear triple spans a candidate plane, kept when no
    lifted point lies below it.

    Examples
    --------
    >>> pts = [(0, 0), (1, 0), (0, 1), (1, 1)]
    >>> lower_hull_cells(pts, {LatticePoint(*p): v for p, v in zip(pts, [0, 0, 0, 1])})
    [(LatticePoint(x=0, y=0), LatticePoint(x=1, y=0), LatticePoint(x=0, y=1)), \
(LatticePoint(x=0, y=1), LatticePoint(x=1, y=0), LatticePoint(x=1, y=1))]
    """

    pts = sorted(set(LatticePoint(int(p[0]), int(p[1])) for p in points))
    heights = {p: Fraction(lifting[p]) for p in pts}
    faces: Set[Cell] = set()

    for a, b, c in itertools.combinations(pts, 3):
        if turn(a, b, c) == 0:
            continue
        plane = Plane([a, b, c], [heights[a], heights[b], heights[c]])
        on_plane = []
        for u in pts:
            diff = heights[u] - plane(u)
            if diff < 0:
                break
            if diff == 0:
                on_plane.append(u)
        else:
            faces.add(tuple(convex_hull(on_plane)))

    return sorted(faces)


class NewtonSubdivision:
    """Subdivision of a lattice polygon with a lifting that certifies it

    Parameters
    ----------
    polygon : `LatticePolygon`
        The Newton polygon

    cells : `sequence`
        Maximal cells, each given by its corners in any order

    lifting : `mapping`
        Lattice point -> rational height, defined at least on every cell corner
    """

    def __init__(
        self,
        polygon: LatticePolygon,
        cells: Iterable[Iterable[Sequence[int]]],
        lifting: Mapping[Any, Any],
    ) -> None:
        self.polygon = polygon
        self.cells: Tuple[Cell, ...] = tuple(sorted(normalize_cell(c) for c in cells))
        self.lifting: Dict[LatticePoint, Fraction] = {
            LatticePoint(int(k[0]), int(k[1])): Fraction(v) for k, v in lifting.items()
        }

        for cell in self.cells:
            for corner in cell:
                if not polygon.contains(corner):
                    raise ValidationError(f"cell corner {tuple(corner)} lies outside the polygon")
                if corner not in self.lifting:
                    raise ValidationError(f"lifting is not defined at cell corner {tuple(corner)}")

        area = sum(cell_doubled_area(c) for c in self.cells)
        if area != polygon.doubled_area:
            raise ValidationError(
                f"cells cover doubled area {area}, the polygon has {polygon.doubled_area}"
            )

    def corners(self) -> Tuple[LatticePoint, ...]:
        """Sorted lattice points that are corners of some cell"""
        return tuple(sorted({p for cell in self.cells for p in cell}))

    def key(self) -> str:
        return "|".join(";".join(f"{p.x},{p.y}" for p in cell) for cell in self.cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NewtonSubdivision):
            return NotImplemented
        return self.polygon == other.polygon and self.cells == other.cells

    def __hash__(self) -> int:
        return hash((self.polygon, self.cells))

    def __repr__(self) -> str:
        return f"NewtonSubdivision({self.polygon!r}, {len(self.cells)} cells)"

    def regularity_violation(self) -> Optional[Tuple[Cell, Cell]]:
        """First pair of cells contradicting the lifting, or None if the lifting induces the
        cells"""

        owner: Dict[LatticePoint, Cell] = {}
        for cell in self.cells:
            for p in cell:
                owner.setdefault(p, cell)

        for cell in self.cells:
            plane = Plane(cell, [self.lifting[p] for p in cell])
            corners = set(cell)
            # a parallelogram must be flat
            for p in cell[3:]:
                if self.lifting[p] != plane(p):
                    return (cell, cell)
            for u, h in self.lifting.items():
                if u in corners:
                    continue
                if h <= plane(u):
                    return (cell, owner.get(u, cell))

        return None

    def is_regular(self) -> bool:
        return self.regularity_violation() is None

    def to_json(self) -> Dict[str, Any]:
        return {
            "polygon": self.polygon.to_json(),
            "cells": [[[p.x, p.y] for p in cell] for cell in self.cells],
            "lifting": {f"{p.x},{p.y}": str(v) for p, v in sorted(self.lifting.items())},
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "NewtonSubdivision":
        try:
            lifting = {
                tuple(int(t) for t in k.split(",")): _frac(v) for k, v in data["lifting"].items()
            }
            return cls(LatticePolygon.from_json(data["polygon"]), data["cells"], lifting)
        except (KeyError, AttributeError, TypeError) as exc:
            raise ValidationError(f"malformed subdivision JSON: {exc}") from exc


@dataclass(frozen=True)
class CurveEdge:
    """Edge of a tropical curve

    `ends` holds the tail vertex and the head vertex, or None for an unbounded edge. `direction`
    is primitive and points from the tail to the head (or along the ray). `dual` is the segment
    of the subdivision the edge is dual to, if known.
    """

    ends: Tuple[int, Optional[int]]
    weight: int
    direction: LatticePoint
    dual: Optional[Segment] = None

    @property
    def bounded(self) -> bool:
        return self.ends[1] is not None

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "ends": list(self.ends),
            "weight": self.weight,
            "dir": [self.direction.x, self.direction.y],
        }
        if self.dual is not None:
            out["dual"] = [[p.x, p.y] for p in self.dual]
        return out


@dataclass(frozen=True)
class Marking:
    """A marked point and the edge it lies on, `parameter` is its position along the edge"""

    point: RationalPoint
    edge: int
    parameter: Fraction = Fraction(0)

    def to_json(self) -> Dict[str, Any]:
        return {"point": _point_json(self.point), "edge": self.edge}


@dataclass(frozen=True)
class BalanceViolation:
    vertex: int
    residual: LatticePoint

    def to_json(self) -> Dict[str, Any]:
        return {"vertex": self.vertex, "residual": [self.residual.x, self.residual.y]}


class TropicalCurve:
    """Embedded weighted plane graph, optionally with its dual subdivision and markings

    Vertex k is dual to `dual.cells[k]` when the curve was built by `curve_from_subdivision`.
    """

    def __init__(
        self,
        vertices: Sequence[RationalPoint],
        edges: Sequence[CurveEdge],
        dual: Optional[NewtonSubdivision] = None,
        markings: Sequence[Marking] = (),
    ) -> None:
        self.vertices: Tuple[RationalPoint, ...] = tuple(
            (Fraction(v[0]), Fraction(v[1])) for v in vertices
        )
        self.edges: Tuple[CurveEdge, ...] = tuple(edges)
        self.dual = dual
        self.markings: Tuple[Marking, ...] = tuple(markings)

        for k, e in enumerate(self.edges):
            for end in e.ends:
                if end is not None and not 0 <= end < len(self.vertices):
                    raise ValidationError(f"edge {k} refers to a missing vertex {end}")
            if e.ends[0] is None:
                raise ValidationError(f"edge {k} has no tail vertex")
            if e.weight < 1:
                raise ValidationError(f"edge {k} has non-positive weight {e.weight}")
            if lattice_length(e.direction) != 1:
                raise ValidationError(f"edge {k} direction {tuple(e.direction)} is not primitive")
        for m in self.markings:
            if not 0 <= m.edge < len(self.edges):
                raise ValidationError(f"marking refers to a missing edge {m.edge}")

        self._incident: Dict[int, List[Tuple[int, LatticePoint, int]]] = {
            k: [] for k in range(len(self.vertices))
        }
        for k, e in enumerate(self.edges):
            tail, head = e.ends
            self._incident[tail].append((k, e.direction, e.weight))  # type: ignore[index]
            if head is not None:
                self._incident[head].append((k, -e.direction, e.weight))

    def incident(self, vertex: int) -> List[Tuple[int, LatticePoint, int]]:
        """(edge index, outgoing primitive direction, weight) for every edge at a vertex"""
        return list(self._incident[vertex])

    def valence(self, vertex: int) -> int:
        return len(self._incident[vertex])

    def bounded_edges(self) -> List[int]:
        return [k for k, e in enumerate(self.edges) if e.bounded]

    def rays(self) -> List[int]:
        return [k for k, e in enumerate(self.edges) if not e.bounded]

    def is_crossing(self, vertex: int) -> bool:
        """True for a 4-valent vertex made of two transverse lines"""
        inc = self._incident[vertex]
        if len(inc) != 4:
            return False
        weighted = [(d, w) for _, d, w in inc]
        for (d1, w1), (d2, w2) in itertools.combinations(weighted, 2):
            if d1 == -d2 and w1 == w2:
                rest = [x for x in weighted if x not in ((d1, w1), (d2, w2))]
                if len(rest) == 2:
                    (d3, w3), (d4, w4) = rest
                    if d3 == -d4 and w3 == w4 and cross(d1, d3) != 0:
                        return True
        return False

    def marked_edges(self) -> Set[int]:
        return {m.edge for m in self.markings}

    def key(self) -> str:
        """Canonical key: dual cells when known, plus the marked dual segments"""
        if self.dual is not None:
            base = self.dual.key()
        else:
            base = ";".join(
                f"{_point_json(self.vertices[e.ends[0]])}"  # type: ignore[index]
                f"{e.direction}{e.weight}"
                for e in self.edges
            )
        marks = sorted(
            (
                str(self.edges[m.edge].dual or m.edge),
                str(m.point[0]),
                str(m.point[1]),
            )
            for m in self.markings
        )
        return base + "#" + ";".join(",".join(t) for t in marks)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "vertices": [_point_json(v) for v in self.vertices],
            "edges": [e.to_json() for e in self.edges],
            "markings": [m.to_json() for m in self.markings],
        }
        if self.dual is not None:
            out["dual"] = self.dual.to_json()
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "TropicalCurve":
        """Rebuild a curve as given, without recomputing it from the dual subdivision"""

        if not isinstance(data, Mapping):
            raise ValidationError("curve JSON must be an object")
        try:
            vertices = [_point(v) for v in data["vertices"]]
            edges = []
            for e in data["edges"]:
                ends = e["ends"]
                dual = e.get("dual")
                edges.append(
                    CurveEdge(
                        ends=(int(ends[0]), None if ends[1] is None else int(ends[1])),
                        weight=int(e["weight"]),
                        direction=_lattice_point(e["dir"]),
                        dual=None if dual is None else segment(*[_lattice_point(p) for p in dual]),
                    )
                )
            dual = NewtonSubdivision.from_json(data["dual"]) if data.get("dual") else None
            curve = cls(vertices, edges, dual)
            markings = [
                make_marking(curve, _point(m["point"]), int(m["edge"]))
                for m in data.get("markings", [])
            ]
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed curve JSON: {exc}") from exc
        return cls(vertices, edges, dual, markings)


def make_marking(curve: TropicalCurve, point: RationalPoint, edge: int) -> Marking:
    """Place a marking, checking that the point lies in the relative interior of the edge"""

    if not 0 <= edge < len(curve.edges):
        raise ValidationError(f"marking refers to a missing edge {edge}")
    e = curve.edges[edge]
    tail = curve.vertices[e.ends[0]]  # type: ignore[index]
    rel = (point[0] - tail[0], point[1] - tail[1])
    d = e.direction
    if cross(rel, d) != 0:
        raise ValidationError(f"marked point {_point_json(point)} is off edge {edge}")
    t = Fraction(rel[0] * d.x + rel[1] * d.y, d.x * d.x + d.y * d.y)
    if t <= 0:
        raise ValidationError(f"marked point {_point_json(point)} is not inside edge {edge}")
    if e.ends[1] is not None:
        head = curve.vertices[e.ends[1]]
        length = Fraction((head[0] - tail[0]) * d.x + (head[1] - tail[1]) * d.y, d.x**2 + d.y**2)
        if t >= length:
            raise ValidationError(f"marked point {_point_json(point)} is not inside edge {edge}")

    return Marking(point=point, edge=edge, parameter=t)


def _cell_gradient(
    cell: Cell, lifting: Mapping[LatticePoint, Fraction]
) -> Tuple[Fraction, Fraction]:
    plane = Plane(cell, [lifting[p] for p in cell])
    return plane.p, plane.q


def curve_from_subdivision(
    sub: NewtonSubdivision, markings: Sequence[Tuple[RationalPoint, Segment]] = ()
) -> TropicalCurve:
    """Dual tropical curve of a regular subdivision

    Parameters
    ----------
    sub : `NewtonSubdivision`
        Subdivision with a lifting inducing it

    markings : `sequence`
        Pairs (point, dual segment); each point must lie inside the edge dual to the segment

    Returns
    -------
    curve : `TropicalCurve`

    Raises
    ------
    RegularityError
        If the lifting does not induce the cells or the cells do not meet edge to edge

    Examples
    --------
    >>> line = curve_from_subdivision(
    ...     NewtonSubdivision(LatticePolygon.simplex(1), [[(0, 0), (1, 0), (0, 1)]], {
    ...         (0, 0): 0, (1, 0): 0, (0, 1): 0}))
    >>> [tuple(line.edges[k].direction) for k in line.rays()]
    [(0, 1), (1, 0), (-1, -1)]
    """

    violation = sub.regularity_violation()
    if violation is not None:
        raise RegularityError(
            f"lifting does not induce the subdivision: cells {list(violation[0])} and "
            f"{list(violation[1])}",
            cells=violation,
        )

    vertices: List[RationalPoint] = []
    for cell in sub.cells:
        p, q = _cell_gradient(cell, sub.lifting)
        vertices.append((-p, -q))

    sides: Dict[Tuple[LatticePoint, LatticePoint], int] = {}
    for k, cell in enumerate(sub.cells):
        for a, b in cell_sides(cell):
            sides[(a, b)] = k

    edges: List[CurveEdge] = []
    for (a, b), k in sides.items():
        vec = b - a
        normal = primitive((-vec.y, vec.x))
        weight = lattice_length(vec)
        other = sides.get((b, a))
        if other is None:
            mid = (Fraction(a.x + b.x, 2), Fraction(a.y + b.y, 2))
            if not sub.polygon.on_boundary(mid):
                raise RegularityError(
                    f"side {tuple(a)}-{tuple(b)} of cell {list(sub.cells[k])} is not shared and "
                    f"does not lie on the boundary",
                    cells=(sub.cells[k], sub.cells[k]),
                )
            edges.append(CurveEdge((k, None), weight, normal, segment(a, b)))
        elif k < other:
            tail, head = vertices[k], vertices[other]
            step = (head[0] - tail[0], head[1] - tail[1])
            if cross(step, normal) != 0 or step[0] * normal.x + step[1] * normal.y <= 0:
                raise ConsistencyError(
                    f"edge between cells {k} and {other} does not follow the dual normal"
                )
            edges.append(CurveEdge((k, other), weight, normal, segment(a, b)))

    edges.sort(key=lambda e: (e.dual, e.ends[0]))
    curve = TropicalCurve(vertices, edges, sub)

    if not markings:
        return curve

    by_dual = {e.dual: k for k, e in enumerate(edges)}
    placed = []
    for point, seg in markings:
        seg = segment(*seg)
        if seg not in by_dual:
            raise ValidationError(f"segment {seg} is not an edge of the subdivision")
        placed.append(make_marking(curve, point, by_dual[seg]))
    placed.sort(key=lambda m: (m.edge, m.point))

    return TropicalCurve(vertices, edges, sub, placed)


def dual_subdivision(curve: TropicalCurve) -> List[Cell]:
    """Read the cells back from the dual segments of the edges around each vertex"""

    cells = []
    for v in range(len(curve.vertices)):
        pts: List[LatticePoint] = []
        for k, _, _ in curve.incident(v):
            seg = curve.edges[k].dual
            if seg is None:
                raise ValidationError(f"edge {k} carries no dual segment")
            pts.extend(seg)
        cells.append(normalize_cell(pts))

    return sorted(cells)


def check_balanced(curve: TropicalCurve) -> List[BalanceViolation]:
    """Vertices where the weighted outgoing directions do not sum to zero

    >>> line = TropicalCurve([(0, 0)], [
    ...     CurveEdge((0, None), 1, LatticePoint(1, 0)),
    ...     CurveEdge((0, None), 1, LatticePoint(0, 1)),
    ...     CurveEdge((0, None), 1, LatticePoint(-1, -1))])
    >>> check_balanced(line)
    []
    """

    out = []
    for v in range(len(curve.vertices)):
        rx = sum(w * d.x for _, d, w in curve.incident(v))
        ry = sum(w * d.y for _, d, w in curve.incident(v))
        if rx or ry:
            out.append(BalanceViolation(v, LatticePoint(rx, ry)))

    return out


def check_degree(curve: TropicalCurve, polygon: LatticePolygon) -> Dict[str, Any]:
    """Compare the weighted ray directions with the inner normals of the polygon

    Returns an empty dict on agreement, otherwise both multisets.
    """

    rays: Dict[LatticePoint, int] = {}
    for k in curve.rays():
        e = curve.edges[k]
        rays[e.direction] = rays.get(e.direction, 0) + e.weight
    expected = degree_directions(polygon)
    if rays == expected:
        return {}
    return {
        "expected": sorted([list(d), m] for d, m in expected.items()),
        "found": sorted([list(d), m] for d, m in rays.items()),
    }


def _require_simple(curve: TropicalCurve) -> Tuple[int, int]:
    trivalent = fourvalent = 0
    for v in range(len(curve.vertices)):
        val = curve.valence(v)
        if val == 3:
            trivalent += 1
        elif val == 4 and curve.is_crossing(v):
            fourvalent += 1
        else:
            raise DomainError(
                f"curve is not simple: vertex {v} has valence {val} "
                f"and is not a transverse crossing"
            )
    return trivalent, fourvalent


def curve_genus(curve: TropicalCurve) -> int:
    """First Betti number of the parameterization, crossings split into two passing lines

    >>> line = TropicalCurve([(0, 0)], [
    ...     CurveEdge((0, None), 1, LatticePoint(1, 0)),
    ...     CurveEdge((0, None), 1, LatticePoint(0, 1)),
    ...     CurveEdge((0, None), 1, LatticePoint(-1, -1))])
    >>> curve_genus(line)
    0
    """

    trivalent, fourvalent = _require_simple(curve)
    return len(curve.bounded_edges()) - trivalent - 2 * fourvalent + 1


def vertex_multiplicity(curve: TropicalCurve, vertex: int) -> int:
    """Index of the lattice spanned by the weighted directions at a trivalent vertex

    Raises
    ------
    DomainError
        If the vertex is not trivalent
    """

    inc = curve.incident(vertex)
    if len(inc) != 3:
        raise DomainError(f"vertex {vertex} has valence {len(inc)}, multiplicity needs 3")
    (_, d1, w1), (_, d2, w2), _ = inc

    return abs(cross((w1 * d1.x, w1 * d1.y), (w2 * d2.x, w2 * d2.y)))


@dataclass(frozen=True)
class FaceCensus:
    """Case of a curve and the number of faces of each type"""

    case_id: str
    counts: Dict[str, int] = field(default_factory=dict)
    special: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.case_id not in CASES:
            raise DomainError(f"unknown case `{self.case_id}`")

    @staticmethod
    def expected_counts(case_id: str, A: int, g: int) -> Dict[str, int]:
        """Face counts of a case in terms of the doubled area A and the genus g of the polygon"""

        if case_id not in CASES:
            raise DomainError(f"unknown case `{case_id}`")
        if A < A_MIN[case_id] or g < 0:
            raise DomainError(f"case {case_id} needs A >= {A_MIN[case_id]} and g >= 0")

        unbounded = A + 2 - 2 * g
        if case_id == "FourValent":
            return {
                "bounded": A - 2 + g,
                "unbounded": unbounded,
                "trivalent": A - 2,
                "fourvalent": 1,
            }
        if case_id in ("Weight2Marked", "Weight2Unmarked"):
            return {
                "bounded_wt1": A - 5 + g,
                "unbounded": unbounded,
                "vertices_off": A - 4,
                "vertices_on": 2,
                "wt2_edge": 1,
            }
        if case_id == "Mult3Vertex":
            return {"bounded": A - 4 + g, "unbounded": unbounded, "ordinary": A - 3, "special": 1}
        return {"bounded": A - 1 + g, "unbounded": unbounded, "trivalent": A}

    @classmethod
    def expected(cls, case_id: str, A: int, g: int) -> "FaceCensus":
        """Synthetic census with the counts every curve of the case must have"""
        return cls(case_id, cls.expected_counts(case_id, A, g))

    def to_json(self) -> Dict[str, Any]:
        return {"case_id": self.case_id, "counts": dict(self.counts)}


def face_census(curve: TropicalCurve, delta: int) -> FaceCensus:
    """Classify a simple curve and count its faces

    Raises
    ------
    ClassificationError
        If a curve shows no special feature or several of them (delta = 1), or any special
        feature (delta = 0)
    """

    if delta not in (0, 1):
        raise DomainError(f"face census is available for delta 0 and 1, not {delta}")

    trivalent, fourvalent = _require_simple(curve)
    bounded = curve.bounded_edges()
    rays = curve.rays()

    crossings = [v for v in range(len(curve.vertices)) if curve.valence(v) == 4]
    heavy_rays = [k for k in rays if curve.edges[k].weight > 1]
    wt2 = [k for k in bounded if curve.edges[k].weight == 2]
    heavier = [k for k in bounded if curve.edges[k].weight > 2]
    on_wt2 = {end for k in wt2 for end in curve.edges[k].ends}
    mult = {
        v: vertex_multiplicity(curve, v)
        for v in range(len(curve.vertices))
        if curve.valence(v) == 3
    }
    mult3 = [v for v, m in mult.items() if m == 3 and v not in on_wt2]
    odd = [v for v, m in mult.items() if m != 1 and v not in mult3 and not (m == 2 and v in on_wt2)]

    features = len(crossings) + len(wt2) + len(mult3) + len(heavy_rays) + len(heavier) + len(odd)
    unbounded = sum(curve.edges[k].weight for k in rays)

    if delta == 0:
        if features:
            raise ClassificationError(f"delta=0 curve has {features} special features")
        return FaceCensus(
            "Smooth", {"bounded": len(bounded), "unbounded": unbounded, "trivalent": trivalent}
        )

    if features != 1 or heavy_rays or heavier or odd:
        logger.error(
            f"classification failed: crossings {crossings}, weight-2 edges {wt2}, "
            f"multiplicity-3 vertices {mult3}, heavy rays {heavy_rays}, other {odd}"
        )
        raise ClassificationError(
            f"delta=1 curve shows {features} special features, expected exactly one"
        )

    if crossings:
        return FaceCensus(
            "FourValent",
            {
                "bounded": len(bounded),
                "unbounded": unbounded,
                "trivalent": trivalent,
                "fourvalent": fourvalent,
            },
            special=tuple(crossings),
        )

    if wt2:
        case = "Weight2Marked" if wt2[0] in curve.marked_edges() else "Weight2Unmarked"
        return FaceCensus(
            case,
            {
                "bounded_wt1": len(bounded) - 1,
                "unbounded": unbounded,
                "vertices_off": trivalent - len(on_wt2),
                "vertices_on": len(on_wt2),
                "wt2_edge": 1,
            },
            special=tuple(wt2),
        )

    return FaceCensus(
        "Mult3Vertex",
        {
            "bounded": len(bounded),
            "unbounded": unbounded,
            "ordinary": trivalent - 1,
            "special": 1,
        },
        special=tuple(mult3),
    )


def validate_curve(
    curve: TropicalCurve, polygon: LatticePolygon, genus: Optional[int] = None
) -> List[Dict[str, Any]]:
    """Every problem found with a curve; an empty list means it is a valid curve of degree
    `polygon` (and of the given genus)"""

    problems: List[Dict[str, Any]] = []
    for violation in check_balanced(curve):
        problems.append({"problem": "unbalanced", **violation.to_json()})

    degree = check_degree(curve, polygon)
    if degree:
        problems.append({"problem": "degree", **degree})

    if curve.dual is not None:
        if curve.dual.polygon != polygon:
            problems.append({"problem": "dual polygon differs from the requested polygon"})
        else:
            try:
                rebuilt = curve_from_subdivision(curve.dual)
            except (RegularityError, ValidationError) as exc:
                problems.append({"problem": "dual", "error": str(exc)})
            else:
                if rebuilt.vertices != curve.vertices or rebuilt.edges != curve.edges:
                    problems.append({"problem": "curve is not dual to its subdivision"})

    if genus is not None:
        try:
            found = curve_genus(curve)
        except DomainError as exc:
            problems.append({"problem": "not simple", "error": str(exc)})
        else:
            if found != genus:
                problems.append({"problem": "genus", "expected": genus, "found": found})

    return problems
