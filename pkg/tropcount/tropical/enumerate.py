"""Enumeration of simple tropical curves through points in general position

Two methods are available:

* `lattice_path` (default): points are stretched along a line of direction w, so that the curves
  through them correspond to lattice paths that increase with lambda(u) = <u, w>. Every path is
  expanded into candidate subdivisions by the positive and negative compressions, and every
  candidate is certified exactly (lifting solved over the rationals, regularity and markings
  checked).
* `brute_force`: every edge-to-edge tiling of the polygon by lattice triangles and parallelograms,
  every choice of marked edges and every assignment of the points. Only usable for small
  polygons; it is the oracle for the lattice-path method and the engine for explicit point sets.
"""

from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

import itertools
import math
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from tropcount.errors import (
    CurveValidationError,
    DomainError,
    GenericityError,
    RegularityError,
    ResourceError,
    ValidationError,
)
from tropcount.io.io import progress_bar
from tropcount.io.logging import logger
from tropcount.tropical.lattice import (
    LatticePoint,
    LatticePolygon,
    lattice_length,
    polygon_stats,
    primitive,
    turn,
)
from tropcount.tropical.linalg import inverse_exact, solve_exact
from tropcount.tropical.tropcurve import (
    Cell,
    NewtonSubdivision,
    RationalPoint,
    Segment,
    TropicalCurve,
    cell_sides,
    curve_from_subdivision,
    normalize_cell,
    segment,
    validate_curve,
)

METHODS = ("lattice_path", "brute_force")
MODES = ("stretched", "explicit")
ORDERS = ("forward", "reverse")
SCHEMA_VERSION = 1

DEFAULT_STRETCH = 10000


def _rational_point(value: Sequence[Any]) -> RationalPoint:
    try:
        x, y = value
        return (Fraction(x), Fraction(y))
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"`{value}` is not a rational point") from exc


def stretched_points(
    direction: Sequence[int], count: int, stretch_factor: int = DEFAULT_STRETCH
) -> List[RationalPoint]:
    """Points far apart on a line of the given direction, slightly moved off the line

    The j-th point sits at -R^j w plus a small offset, R being the stretch factor.

    >>> stretched_points((1, -2), 2, 10)[0]
    (Fraction(-49, 5), Fraction(521, 26))
    """

    out = []
    for j in range(1, count + 1):
        scale = stretch_factor**j
        k = 2 * j + 3
        out.append(
            (
                -scale * direction[0] + Fraction(1, k),
                -scale * direction[1] + Fraction(1, k * k + 1),
            )
        )
    return out


@dataclass(frozen=True)
class PointConfiguration:
    """Where the curves have to pass

    Parameters
    ----------
    mode : `str`
        `stretched` (points generated along a line) or `explicit` (points given)

    count : `int`
        Number of points, n - delta

    points : `tuple`
        The points, explicit mode only

    direction : `tuple`
        Primitive direction of the line, stretched mode only; (1, -(width + 1)) by default

    stretch_factor : `int`
        Ratio between the distances of consecutive stretched points from the origin
    """

    mode: str
    count: int
    points: Tuple[RationalPoint, ...] = ()
    direction: Optional[Tuple[int, int]] = None
    stretch_factor: int = DEFAULT_STRETCH

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValidationError(f"unknown configuration mode `{self.mode}`, expected {MODES}")
        if self.count < 0:
            raise ValidationError(f"point count must be nonnegative, got {self.count}")
        if self.points and len(self.points) != self.count:
            raise ValidationError(
                f"configuration declares {self.count} points but lists {len(self.points)}"
            )
        if self.direction is not None:
            if len(self.direction) != 2 or lattice_length(self.direction) != 1:
                raise ValidationError(f"direction {self.direction} is not a primitive vector")
        if self.stretch_factor < 2:
            raise ValidationError(f"stretch factor must be at least 2, got {self.stretch_factor}")

    @classmethod
    def stretched(
        cls,
        polygon: LatticePolygon,
        delta: int,
        direction: Optional[Sequence[int]] = None,
        stretch_factor: int = DEFAULT_STRETCH,
    ) -> "PointConfiguration":
        count = len(polygon.lattice_points()) - 1 - delta
        return cls(
            "stretched",
            count,
            direction=None if direction is None else (int(direction[0]), int(direction[1])),
            stretch_factor=stretch_factor,
        )

    @classmethod
    def explicit(cls, points: Sequence[Sequence[Any]]) -> "PointConfiguration":
        pts = tuple(_rational_point(p) for p in points)
        return cls("explicit", len(pts), pts)

    def line_direction(self, polygon: LatticePolygon) -> LatticePoint:
        if self.direction is not None:
            return LatticePoint(*self.direction)
        return LatticePoint(1, -(polygon.width() + 1))

    def resolve(self, polygon: LatticePolygon) -> Tuple[RationalPoint, ...]:
        """The actual points of the configuration"""

        if self.mode == "explicit":
            if len(self.points) != self.count:
                raise ValidationError("explicit configuration needs its points")
            return self.points

        return tuple(
            stretched_points(self.line_direction(polygon), self.count, self.stretch_factor)
        )

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"mode": self.mode, "count": self.count}
        if self.mode == "explicit":
            out["points"] = [[str(x), str(y)] for x, y in self.points]
        else:
            if self.direction is not None:
                out["direction"] = list(self.direction)
            out["stretch_factor"] = self.stretch_factor
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "PointConfiguration":
        if not isinstance(data, Mapping):
            raise ValidationError("configuration JSON must be an object")
        direction = data.get("direction")
        try:
            return cls(
                mode=data.get("mode", "stretched"),
                count=int(data["count"]),
                points=tuple(_rational_point(p) for p in data.get("points", [])),
                direction=None if direction is None else (int(direction[0]), int(direction[1])),
                stretch_factor=int(data.get("stretch_factor", DEFAULT_STRETCH)),
            )
        except (KeyError, TypeError, IndexError) as exc:
            raise ValidationError(f"malformed configuration JSON: {exc}") from exc


@dataclass
class EnumerationResult:
    """Curves found for a polygon, delta and configuration

    `genus` is the genus of the curves, g - delta.
    """

    polygon: LatticePolygon
    delta: int
    genus: int
    configuration: PointConfiguration
    curves: List[TropicalCurve] = field(default_factory=list)
    method: str = "lattice_path"

    def __len__(self) -> int:
        return len(self.curves)

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "polygon": self.polygon.to_json(),
            "delta": self.delta,
            "genus": self.genus,
            "method": self.method,
            "configuration": self.configuration.to_json(),
            "curves": [c.to_json() for c in self.curves],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "EnumerationResult":
        if not isinstance(data, Mapping):
            raise ValidationError("result JSON must be an object")
        if data.get("schema") != SCHEMA_VERSION:
            raise ValidationError(f"unsupported result schema {data.get('schema')}")
        try:
            return cls(
                polygon=LatticePolygon.from_json(data["polygon"]),
                delta=int(data["delta"]),
                genus=int(data["genus"]),
                configuration=PointConfiguration.from_json(data["configuration"]),
                curves=[TropicalCurve.from_json(c) for c in data["curves"]],
                method=data.get("method", "lattice_path"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed result JSON: {exc}") from exc


def sweep_order(polygon: LatticePolygon, direction: Sequence[int]) -> List[LatticePoint]:
    """Lattice points sorted by <u, direction>

    Raises
    ------
    ValidationError
        If two lattice points share the same value
    """

    values: Dict[int, LatticePoint] = {}
    for u in polygon.lattice_points():
        lam = u.x * direction[0] + u.y * direction[1]
        if lam in values:
            raise ValidationError(
                f"direction {tuple(direction)} is not injective on the lattice points: "
                f"{tuple(values[lam])} and {tuple(u)}"
            )
        values[lam] = u

    return [values[k] for k in sorted(values)]


def lattice_paths(
    polygon: LatticePolygon, direction: Sequence[int], steps: int
) -> Iterator[Tuple[LatticePoint, ...]]:
    """Increasing paths with `steps` steps from the first to the last point of the sweep"""

    order = sweep_order(polygon, direction)
    first, last, middle = order[0], order[-1], order[1:-1]
    if steps < 1:
        return
    for inner in itertools.combinations(middle, steps - 1):
        yield (first,) + inner + (last,)


def boundary_cycle(polygon: LatticePolygon) -> List[LatticePoint]:
    """Boundary lattice points in counterclockwise order"""

    out: List[LatticePoint] = []
    for a, b in polygon.edges():
        step = primitive(b - a)
        out.extend(a + (k * step.x, k * step.y) for k in range(lattice_length(b - a)))
    return out


def boundary_paths(
    polygon: LatticePolygon, start: LatticePoint, end: LatticePoint
) -> Tuple[Tuple[LatticePoint, ...], Tuple[LatticePoint, ...]]:
    """Clockwise and counterclockwise boundary paths from start to end"""

    cycle = boundary_cycle(polygon)
    n = len(cycle)
    i = cycle.index(start)

    def walk(sign: int) -> Tuple[LatticePoint, ...]:
        out = [start]
        k = i
        while out[-1] != end:
            k = (k + sign) % n
            out.append(cycle[k])
        return tuple(out)

    return walk(-1), walk(+1)


def compress(
    path: Tuple[LatticePoint, ...],
    target: Tuple[LatticePoint, ...],
    side: int,
    polygon: LatticePolygon,
) -> List[List[Cell]]:
    """All ways to sweep a path onto a boundary path

    side=+1 removes left turns (toward the clockwise boundary path), side=-1 removes right turns
    (toward the counterclockwise one). At the first such turn a-b-c the vertex b is either
    dropped, adding the triangle abc, or replaced by a+c-b, adding a parallelogram. Each leaf
    reaching `target` contributes the list of cells swept.
    """

    if path == target:
        return [[]]

    for k in range(1, len(path) - 1):
        if side * turn(path[k - 1], path[k], path[k + 1]) > 0:
            break
    else:
        return []

    a, b, c = path[k - 1], path[k], path[k + 1]
    out: List[List[Cell]] = []

    triangle = normalize_cell((a, b, c))
    for rest in compress(path[:k] + path[k + 1 :], target, side, polygon):
        out.append([triangle] + rest)

    d = a + c - b
    if polygon.contains(d):
        parallelogram = normalize_cell((a, b, c, d))
        for rest in compress(path[:k] + (d,) + path[k + 1 :], target, side, polygon):
            out.append([parallelogram] + rest)

    return out


def tiling_genus(cells: Sequence[Cell]) -> Optional[int]:
    """Genus of the curve dual to a tiling by triangles and parallelograms, None otherwise"""

    directed: Set[Tuple[LatticePoint, LatticePoint]] = set()
    triangles = parallelograms = 0
    for cell in cells:
        if len(cell) == 3:
            triangles += 1
        elif len(cell) == 4 and cell[0] + cell[2] == cell[1] + cell[3]:
            parallelograms += 1
        else:
            return None
        directed.update(cell_sides(cell))

    interior = sum(1 for a, b in directed if (b, a) in directed) // 2
    return interior - triangles - 2 * parallelograms + 1


def _boundary_primitive(cells: Sequence[Cell]) -> bool:
    directed = {s for cell in cells for s in cell_sides(cell)}
    return all(lattice_length(b - a) == 1 for a, b in directed if (b, a) not in directed)


def _system(
    cells: Sequence[Cell], marked: Sequence[Segment]
) -> Tuple[List[LatticePoint], List[List[int]]]:
    """Corners and the coefficient rows of the lifting equations

    The lifting is fixed to 0 at the first corner; the unknowns are its values at the others.
    A marked segment ab gives phi(a) - phi(b) = <b - a, p>, a parallelogram abcd gives
    phi(a) + phi(c) - phi(b) - phi(d) = 0.
    """

    corners = sorted({p for cell in cells for p in cell})
    index = {u: k - 1 for k, u in enumerate(corners) if k > 0}
    rows: List[List[int]] = []

    def row(plus: Sequence[LatticePoint], minus: Sequence[LatticePoint]) -> List[int]:
        r = [0] * len(index)
        for u in plus:
            if u in index:
                r[index[u]] += 1
        for u in minus:
            if u in index:
                r[index[u]] -= 1
        return r

    for a, b in marked:
        rows.append(row([a], [b]))
    for cell in cells:
        if len(cell) == 4:
            rows.append(row([cell[0], cell[2]], [cell[1], cell[3]]))

    return corners, rows


def _rhs(
    cells: Sequence[Cell], marked: Sequence[Segment], points: Sequence[RationalPoint]
) -> List[Fraction]:
    out = [(b.x - a.x) * p[0] + (b.y - a.y) * p[1] for (a, b), p in zip(marked, points)]
    out.extend(Fraction(0) for cell in cells if len(cell) == 4)
    return out


def _passes_through(
    sub: NewtonSubdivision, seg: Segment, point: RationalPoint
) -> bool:
    """True if the point lies inside the edge dual to seg: exactly its ends minimize"""

    values = {u: u.x * point[0] + u.y * point[1] + h for u, h in sub.lifting.items()}
    low = min(values.values())
    return {u for u, v in values.items() if v == low} == set(seg)


def certify(
    polygon: LatticePolygon,
    cells: Sequence[Cell],
    lifting: Mapping[LatticePoint, Fraction],
    marked: Sequence[Segment],
    points: Sequence[RationalPoint],
) -> Optional[TropicalCurve]:
    """The marked curve if the lifting induces the cells and puts every point on its edge"""

    try:
        sub = NewtonSubdivision(polygon, cells, lifting)
    except ValidationError:
        return None
    if not all(_passes_through(sub, s, p) for s, p in zip(marked, points)):
        return None
    if sub.regularity_violation() is not None:
        return None
    try:
        return curve_from_subdivision(sub, list(zip(points, marked)))
    except (RegularityError, ValidationError):
        return None


def _solve_candidate(
    polygon: LatticePolygon,
    cells: Sequence[Cell],
    marked: Sequence[Segment],
    points: Sequence[RationalPoint],
) -> Optional[TropicalCurve]:
    corners, rows = _system(cells, marked)
    solution = solve_exact(rows, _rhs(cells, marked, points))
    if not solution.consistent:
        return None

    lifting = {corners[0]: Fraction(0)}
    lifting.update(zip(corners[1:], solution.values))  # type: ignore[arg-type]
    curve = certify(polygon, cells, lifting, marked, points)
    if curve is not None and not solution.unique:
        # the certificate is open in the solution family, so the whole family passes
        raise GenericityError(
            f"configuration is not generic: a {solution.unknowns - solution.rank}-dimensional "
            f"family of curves with cells {[list(c) for c in cells]} passes through the points"
        )

    return curve


def _expand_path(
    task: Tuple[
        LatticePolygon,
        Tuple[LatticePoint, ...],
        Tuple[RationalPoint, ...],
        int,
        Tuple[str, ...],
        int,
    ]
) -> Tuple[List[TropicalCurve], int]:
    """Certified curves of one lattice path and the number of candidates examined"""

    polygon, path, points, genus, orders, budget = task
    plus_target, minus_target = boundary_paths(polygon, path[0], path[-1])
    plus = compress(path, plus_target, +1, polygon)
    minus = compress(path, minus_target, -1, polygon)

    steps = [segment(path[k], path[k + 1]) for k in range(len(path) - 1)]
    assignments = {"forward": points, "reverse": tuple(reversed(points))}

    curves: List[TropicalCurve] = []
    examined = 0
    for cells_plus, cells_minus in itertools.product(plus, minus):
        examined += 1
        if examined > budget:
            raise ResourceError(f"more than {budget} candidate subdivisions for path {path}")
        cells = sorted(set(cells_plus + cells_minus))
        if tiling_genus(cells) != genus or not _boundary_primitive(cells):
            continue
        corners = {p for cell in cells for p in cell}
        if not set(path) <= corners:
            continue
        for order in orders:
            curve = _solve_candidate(polygon, cells, steps, assignments[order])
            if curve is not None:
                curves.append(curve)

    return curves, examined


def _map_tasks(func: Any, tasks: Sequence[Any], jobs: int, progress: bool) -> List[Any]:
    """Results of func over the tasks, in task order whatever the number of workers"""

    results: List[Any] = [None] * len(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        for k, task in enumerate(tasks):
            results[k] = func(task)
            if progress:
                progress_bar(k + 1, len(tasks), left_msg="paths")
        return results

    with ProcessPoolExecutor(max_workers=jobs) as ex:
        futures = {ex.submit(func, task): k for k, task in enumerate(tasks)}
        for done, future in enumerate(as_completed(futures), start=1):
            results[futures[future]] = future.result()
            if progress:
                progress_bar(done, len(tasks), left_msg="paths")

    return results


def _lattice_path_curves(
    polygon: LatticePolygon,
    points: Tuple[RationalPoint, ...],
    direction: LatticePoint,
    genus: int,
    orders: Tuple[str, ...],
    max_subdivisions: int,
    jobs: int,
    progress: bool,
) -> List[TropicalCurve]:

    paths = list(lattice_paths(polygon, direction, len(points)))
    logger.debug(f" Enumerator: {len(paths)} lattice paths with {len(points)} steps")

    tasks = [(polygon, path, points, genus, orders, max_subdivisions) for path in paths]
    results = _map_tasks(_expand_path, tasks, jobs, progress)

    curves: List[TropicalCurve] = []
    examined = 0
    for path, (found, count) in zip(paths, results):
        logger.debug(f" Enumerator: path {[tuple(p) for p in path]} -> {len(found)} curves")
        curves.extend(found)
        examined += count
    if examined > max_subdivisions:
        raise ResourceError(f"more than {max_subdivisions} candidate subdivisions examined")

    return curves


def _tiles_on(
    u: LatticePoint, v: LatticePoint, points: Sequence[LatticePoint], polygon: LatticePolygon
) -> Iterator[Cell]:
    for w in points:
        if turn(u, v, w) <= 0:
            continue
        yield normalize_cell((u, v, w))
        d = u + w - v
        if polygon.contains(d):
            yield normalize_cell((u, v, w, d))


def _interiors_overlap(p: Cell, q: Cell) -> bool:
    """Separating-axis test on two convex lattice polygons"""

    for this, other in ((p, q), (q, p)):
        for a, b in cell_sides(this):
            if all(turn(a, b, x) <= 0 for x in other):
                return False
    return True


def tilings(polygon: LatticePolygon, budget: int) -> Iterator[List[Cell]]:
    """Edge-to-edge tilings of a polygon by lattice triangles and parallelograms

    Every boundary side is primitive. The region left of the smallest open edge is always filled
    next, so each tiling is produced once.
    """

    points = polygon.lattice_points()
    open_edges: Set[Tuple[LatticePoint, LatticePoint]] = set()
    cycle = boundary_cycle(polygon)
    for k, a in enumerate(cycle):
        open_edges.add((a, cycle[(k + 1) % len(cycle)]))

    tiles: List[Cell] = []
    found = 0

    def extend() -> Iterator[List[Cell]]:
        nonlocal found
        if not open_edges:
            found += 1
            if found > budget:
                raise ResourceError(f"polygon has more than {budget} tilings")
            yield sorted(tiles)
            return

        u, v = min(open_edges)
        for tile in _tiles_on(u, v, points, polygon):
            if any(_interiors_overlap(tile, t) for t in tiles):
                continue
            closed = [s for s in cell_sides(tile) if s in open_edges]
            opened = [(b, a) for a, b in cell_sides(tile) if (a, b) not in open_edges]
            open_edges.difference_update(closed)
            open_edges.update(opened)
            tiles.append(tile)

            yield from extend()

            tiles.pop()
            open_edges.difference_update(opened)
            open_edges.update(closed)

    yield from extend()


def _brute_force_curves(
    polygon: LatticePolygon,
    points: Tuple[RationalPoint, ...],
    genus: int,
    max_subdivisions: int,
    progress: bool,
) -> List[TropicalCurve]:

    s = len(points)
    curves: List[TropicalCurve] = []
    examined = 0
    candidates = [t for t in tilings(polygon, max_subdivisions) if tiling_genus(t) == genus]
    logger.debug(f" Enumerator: {len(candidates)} tilings of genus {genus}")

    for count, cells in enumerate(candidates, start=1):
        corners = {p for cell in cells for p in cell}
        parallelograms = sum(1 for cell in cells if len(cell) == 4)
        if len(corners) != s + parallelograms + 1:
            continue

        edges = sorted({segment(a, b) for cell in cells for a, b in cell_sides(cell)})
        # every marked-edge set against every assignment of the points
        examined += math.perm(len(edges), s)
        if examined > max_subdivisions:
            raise ResourceError(
                f"brute force needs more than {max_subdivisions} candidate curves, use a "
                f"stretched configuration or raise the budget"
            )
        for marked in itertools.combinations(edges, s):
            corner_list, rows = _system(cells, marked)
            inverse = inverse_exact(rows) if rows and len(rows) == len(rows[0]) else None
            for assignment in itertools.permutations(points):
                if inverse is None:
                    curve = _solve_candidate(polygon, cells, marked, assignment)
                else:
                    rhs = np.array(_rhs(cells, marked, assignment), dtype=object)
                    lifting = {corner_list[0]: Fraction(0)}
                    lifting.update(zip(corner_list[1:], inverse.dot(rhs)))
                    curve = certify(polygon, cells, lifting, marked, assignment)
                if curve is not None:
                    curves.append(curve)

        if progress:
            progress_bar(count, len(candidates), left_msg="tilings")

    return curves


def enumerate_curves(
    polygon: LatticePolygon,
    delta: int,
    config: PointConfiguration,
    method: Optional[str] = None,
    jobs: int = 1,
    max_lattice_points: int = 64,
    max_subdivisions: int = 1_000_000,
    orders: Sequence[str] = ORDERS,
    progress: bool = False,
) -> EnumerationResult:
    """All simple marked tropical curves of degree `polygon` and genus g - delta through the
    points of `config`

    Parameters
    ----------
    polygon : `LatticePolygon`
        Newton polygon

    delta : `int`
        Number of nodes, 0 <= delta <= g

    config : `PointConfiguration`
        Points the curves pass through; explicit points are handled by the brute-force method

    method : `str`
        `lattice_path` or `brute_force`; by default `lattice_path` for stretched configurations

    jobs : `int`
        Worker processes used to expand lattice paths

    Returns
    -------
    result : `EnumerationResult`
        Curves sorted by their canonical key

    Raises
    ------
    GenericityError
        If a positive-dimensional family of curves passes through the points

    ResourceError
        If the polygon has more than `max_lattice_points` lattice points or more than
        `max_subdivisions` candidates are examined
    """

    stats = polygon_stats(polygon)
    if not 0 <= delta <= stats.interior_points:
        raise DomainError(f"delta must lie between 0 and g = {stats.interior_points}, got {delta}")
    if stats.total_points > max_lattice_points:
        raise ResourceError(
            f"polygon has {stats.total_points} lattice points, the budget is {max_lattice_points}"
        )
    expected = stats.total_points - 1 - delta
    if config.count != expected:
        raise ValidationError(f"configuration has {config.count} points, n - delta = {expected}")

    method = method or ("lattice_path" if config.mode == "stretched" else "brute_force")
    if method not in METHODS:
        raise ValidationError(f"unknown enumeration method `{method}`, expected {METHODS}")
    if method == "lattice_path" and config.mode == "explicit":
        logger.info("lattice paths need a stretched configuration, using brute force instead")
        method = "brute_force"
    for order in orders:
        if order not in ORDERS:
            raise ValidationError(f"unknown point order `{order}`, expected {ORDERS}")

    genus = stats.interior_points - delta
    points = config.resolve(polygon)
    logger.info(
        f"enumerating curves of genus {genus} through {len(points)} points "
        f"(polygon {polygon.key()}, method {method})"
    )

    if method == "lattice_path":
        found = _lattice_path_curves(
            polygon,
            points,
            config.line_direction(polygon),
            genus,
            tuple(orders),
            max_subdivisions,
            jobs,
            progress,
        )
    else:
        found = _brute_force_curves(polygon, points, genus, max_subdivisions, progress)

    unique: Dict[str, TropicalCurve] = {}
    for curve in found:
        unique.setdefault(curve.key(), curve)
    curves = [unique[k] for k in sorted(unique)]
    logger.info(f"found {len(curves)} curves ({len(found)} before removing duplicates)")

    return EnumerationResult(polygon, delta, genus, config, curves, method)


def ingest_curves(
    polygon: LatticePolygon, delta: int, curves: Sequence[Mapping[str, Any]]
) -> EnumerationResult:
    """Wrap user-supplied curve JSON for counting

    Raises
    ------
    CurveValidationError
        With one report entry per rejected curve
    """

    stats = polygon_stats(polygon)
    if not 0 <= delta <= stats.interior_points:
        raise DomainError(f"delta must lie between 0 and g = {stats.interior_points}, got {delta}")
    genus = stats.interior_points - delta

    accepted: List[TropicalCurve] = []
    report: List[Dict[str, Any]] = []
    for k, data in enumerate(curves):
        try:
            curve = TropicalCurve.from_json(data)
        except ValidationError as exc:
            report.append({"curve": k, "problems": [{"problem": "malformed", "error": str(exc)}]})
            continue
        problems = validate_curve(curve, polygon, genus)
        if problems:
            report.append({"curve": k, "problems": problems})
        else:
            accepted.append(curve)

    if report:
        logger.error(f"{len(report)} of {len(curves)} curves failed validation")
        raise CurveValidationError(
            f"{len(report)} of {len(curves)} curves failed validation", report=report
        )

    config = PointConfiguration("explicit", stats.total_points - 1 - delta)
    return EnumerationResult(polygon, delta, genus, config, accepted, method="ingested")
