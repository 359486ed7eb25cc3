"""Static SVG pictures of tropical curves and their Newton subdivisions"""

from typing import Dict, List, Tuple

from dataclasses import dataclass

import svgwrite

from tropcount.tropical.tropcurve import TropicalCurve, vertex_multiplicity

Point = Tuple[float, float]

COLORS = {
    "edge": "black",
    "heavy": "crimson",
    "crossing": "royalblue",
    "special": "darkorange",
    "marking": "black",
    "cell": "gray",
}


@dataclass(frozen=True)
class RenderOptions:
    width: int = 400
    margin: int = 24
    show_subdivision: bool = True
    label_weights: bool = True
    # ray length as a fraction of the picture span
    ray_fraction: float = 0.25


def _r(v: float) -> float:
    return round(float(v), 3)


class _Frame:
    """Maps plane coordinates into a square box, y pointing up"""

    def __init__(self, points: List[Point], origin: Point, size: float) -> None:
        xs = [p[0] for p in points] or [0.0]
        ys = [p[1] for p in points] or [0.0]
        self.xmin, self.ymax = min(xs), max(ys)
        span = max(max(xs) - self.xmin, self.ymax - min(ys), 1e-9)
        self.scale = size / span
        self.origin = origin
        # center the shorter side
        self.dx = (size - (max(xs) - self.xmin) * self.scale) / 2
        self.dy = (size - (self.ymax - min(ys)) * self.scale) / 2

    def __call__(self, p: Point) -> Point:
        return (
            _r(self.origin[0] + self.dx + (p[0] - self.xmin) * self.scale),
            _r(self.origin[1] + self.dy + (self.ymax - p[1]) * self.scale),
        )


def _geometry(curve: TropicalCurve, ray_fraction: float) -> Tuple[List[Point], Dict[int, Point]]:
    """Vertices as floats and the far end of every ray"""

    vertices = [(float(x), float(y)) for x, y in curve.vertices]
    points = vertices + [(float(m.point[0]), float(m.point[1])) for m in curve.markings]
    xs = [p[0] for p in points] or [0.0]
    ys = [p[1] for p in points] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)

    ends: Dict[int, Point] = {}
    for k in curve.rays():
        e = curve.edges[k]
        tail = vertices[e.ends[0]]  # type: ignore[index]
        d = e.direction
        norm = (d.x**2 + d.y**2) ** 0.5
        length = ray_fraction * span / norm
        ends[k] = (tail[0] + d.x * length, tail[1] + d.y * length)

    return vertices, ends


def render_svg(curve: TropicalCurve, options: RenderOptions = RenderOptions()) -> str:
    """SVG document of a curve

    Edges of weight >= 2 are drawn thicker in red with their weight, crossings are circled in
    blue, trivalent vertices of multiplicity >= 3 in orange and marked points are black dots.
    The dual subdivision is drawn as an inset in the upper right corner. The output only depends
    on the curve and the options.
    """

    w, m = options.width, options.margin
    dwg = svgwrite.Drawing(size=(w, w), profile="full")
    dwg.add(dwg.rect(insert=(0, 0), size=(w, w), fill="white"))

    vertices, ray_ends = _geometry(curve, options.ray_fraction)
    frame = _Frame(vertices + list(ray_ends.values()), (m, m), w - 2 * m)

    edges = dwg.g(id="edges")
    labels = dwg.g(id="labels", font_size="11px", font_family="sans-serif")
    for k, e in enumerate(curve.edges):
        start = frame(vertices[e.ends[0]])  # type: ignore[index]
        end = frame(vertices[e.ends[1]]) if e.ends[1] is not None else frame(ray_ends[k])
        heavy = e.weight > 1
        edges.add(
            dwg.line(
                start=start,
                end=end,
                stroke=COLORS["heavy"] if heavy else COLORS["edge"],
                stroke_width=1.5 * e.weight,
                class_=f"edge weight-{e.weight}",
            )
        )
        if heavy and options.label_weights:
            mid = (_r((start[0] + end[0]) / 2 + 4), _r((start[1] + end[1]) / 2 - 4))
            labels.add(dwg.text(str(e.weight), insert=mid, fill=COLORS["heavy"]))
    dwg.add(edges)

    features = dwg.g(id="features")
    for v, p in enumerate(vertices):
        valence = curve.valence(v)
        if valence == 4:
            features.add(
                dwg.circle(center=frame(p), r=6, fill="none", stroke=COLORS["crossing"],
                           class_="crossing")
            )
        elif valence == 3 and vertex_multiplicity(curve, v) >= 3:
            features.add(
                dwg.circle(center=frame(p), r=6, fill="none", stroke=COLORS["special"],
                           class_="special-vertex")
            )
    for mk in curve.markings:
        point = (float(mk.point[0]), float(mk.point[1]))
        features.add(dwg.circle(center=frame(point), r=3, fill=COLORS["marking"], class_="marking"))
    dwg.add(features)
    dwg.add(labels)

    if options.show_subdivision and curve.dual is not None:
        size = w * 0.3
        origin = (w - size - 4, 4.0)
        corners = [(float(p.x), float(p.y)) for p in curve.dual.polygon.vertices]
        inset_frame = _Frame(corners, (origin[0] + 6, origin[1] + 6), size - 12)
        inset = dwg.g(id="subdivision")
        inset.add(
            dwg.rect(insert=(_r(origin[0]), _r(origin[1])), size=(_r(size), _r(size)),
                     fill="white", stroke=COLORS["cell"])
        )
        for cell in curve.dual.cells:
            inset.add(
                dwg.polygon(
                    points=[inset_frame((float(p.x), float(p.y))) for p in cell],
                    fill="none",
                    stroke=COLORS["cell"],
                    stroke_width=1,
                )
            )
        for e in curve.edges:
            if e.weight > 1 and e.dual is not None:
                a, b = e.dual
                inset.add(
                    dwg.line(
                        start=inset_frame((float(a.x), float(a.y))),
                        end=inset_frame((float(b.x), float(b.y))),
                        stroke=COLORS["heavy"],
                        stroke_width=2,
                    )
                )
        dwg.add(inset)

    return dwg.tostring()
