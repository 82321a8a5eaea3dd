"""SVG rendering of Legendrian polygons as co-oriented piecewise circular curves.

Everything up to the choice of arcs is exact; floats are introduced only
when a scene is built from exact circles and base points.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .circles import (
    Circle,
    ContactElement,
    LineOrInfinity,
    MobiusMatrix,
    contact_element,
    lagrangian_to_circle,
    mobius_embed,
    radial_translation_matrix,
)
from .core import Lagrangian
from .linalg import ComplexQ, matvec
from .polygon import LegendrianPolygon, apply_symplectic, cyclically_adjacent, edge_lagrangian, incidence_witness

TAU = 2 * math.pi


class RenderError(ValueError):
    """The configuration cannot be placed in the affine chart."""


def _mob(a, b, c, d) -> MobiusMatrix:
    return MobiusMatrix(ComplexQ.of(a), ComplexQ.of(b), ComplexQ.of(c), ComplexQ.of(d))


# Fixed repositioning moves, tried in order. With the chart action
# p -> (c + d p) / (a + b p), the moves [[1, b], [0, 1]] send infinity to 1/b.
REPOSITION_MOVES: tuple[MobiusMatrix, ...] = (
    _mob(1, 0, 0, 1),
    _mob(1, Fraction(1, 2), 0, 1),
    _mob(1, (Fraction(1, 3), Fraction(1, 5)), 0, 1),
    _mob(1, (0, Fraction(1, 2)), 0, 1),
    _mob(1, (Fraction(-1, 4), Fraction(1, 3)), 0, 1),
    _mob(1, Fraction(1, 7), 0, 1),
    _mob(1, (Fraction(2, 5), Fraction(-1, 7)), 0, 1),
    _mob(1, (Fraction(-1, 6), Fraction(-1, 5)), 0, 1),
    _mob(1, 1, 0, 1),
    _mob(1, (1, 1), 0, 1),
    _mob(1, (Fraction(-2, 3), Fraction(1, 4)), 0, 1),
    _mob(1, (Fraction(1, 9), Fraction(2, 9)), 0, 1),
)


@dataclass(frozen=True)
class ExactEdge:
    """One edge in the chart: circle, exact endpoint and midpoint contact elements."""

    index: int
    circle: Circle
    start: ContactElement
    mid: ContactElement
    end: ContactElement


def edge_in_chart(P: LegendrianPolygon, k: int) -> ExactEdge | None:
    circ = lagrangian_to_circle(edge_lagrangian(P, k))
    if isinstance(circ, LineOrInfinity):
        return None
    a, b = P.endpoints(k)
    m = tuple((x + y) / 2 for x, y in zip(a, b))
    ces = [contact_element(v) for v in (a, m, b)]
    if any(ce.base is None for ce in ces):
        return None
    return ExactEdge(k, circ, *ces)


def exact_edges(P: LegendrianPolygon) -> tuple[ExactEdge, ...] | None:
    out = []
    for k in range(P.n):
        e = edge_in_chart(P, k)
        if e is None:
            return None
        out.append(e)
    return tuple(out)


def choose_reposition(polygons: Sequence[LegendrianPolygon]) -> MobiusMatrix:
    """First move of REPOSITION_MOVES that puts every polygon in the chart."""
    for M in REPOSITION_MOVES:
        m = mobius_embed(M)
        if all(exact_edges(apply_symplectic(P, m)) is not None for P in polygons):
            return M
    raise RenderError(f"no repositioning move places all {len(polygons)} configuration(s) in the affine chart")


# ---------------------------------------------------------------- float scene


@dataclass(frozen=True)
class Arc:
    """Arc of the circle (center, radius) from angle ``theta0`` sweeping by
    ``sweep`` radians (counterclockwise if positive). radius == 0 is a
    collapsed arc at ``center``."""

    edge: int
    center: complex
    radius: float
    theta0: float
    sweep: float
    start: complex
    end: complex

    @property
    def collapsed(self) -> bool:
        return self.radius == 0.0

    def contains_angle(self, theta: float, slack: float = 0.0) -> bool:
        rel = (theta - self.theta0) % TAU if self.sweep >= 0 else (self.theta0 - theta) % TAU
        span = abs(self.sweep)
        return rel <= span + slack or rel >= TAU - slack

    def point_at(self, s: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * (self.theta0 + s * self.sweep))


@dataclass(frozen=True)
class Arrow:
    base: complex
    direction: complex  # unit vector


@dataclass
class RenderScene:
    arcs: list[Arc] = field(default_factory=list)
    arrows: list[Arrow] = field(default_factory=list)
    circles: list[tuple[complex, float]] = field(default_factory=list)
    curve: list[complex] = field(default_factory=list)
    stroke: str = "#1f3a93"
    arrow_stroke: str = "#c0392b"
    circle_stroke: str = "#7f8c8d"


def _angle(z: complex, center: complex) -> float:
    return math.atan2(z.imag - center.imag, z.real - center.real)


def edge_arc(e: ExactEdge) -> Arc:
    center = complex(e.circle.center)
    r = float(e.circle.radius)
    s, m, t = complex(e.start.base), complex(e.mid.base), complex(e.end.base)
    if e.circle.is_point:
        return Arc(e.index, center, 0.0, 0.0, 0.0, center, center)
    a0, am, a1 = _angle(s, center), _angle(m, center), _angle(t, center)
    ccw = (a1 - a0) % TAU
    # the segment's image runs from start to end through the midpoint
    sweep = ccw if (am - a0) % TAU < ccw else ccw - TAU
    return Arc(e.index, center, r, a0, sweep, s, t)


def _unit(z: complex) -> complex:
    return z / abs(z)


def polygon_scene(P: LegendrianPolygon, reposition: MobiusMatrix | None = None, arrows: bool = True) -> RenderScene:
    if reposition is None:
        reposition = choose_reposition([P])
    Q = apply_symplectic(P, mobius_embed(reposition))
    edges = exact_edges(Q)
    if edges is None:
        raise RenderError("configuration is not in the affine chart after repositioning")
    scene = RenderScene()
    for e in edges:
        scene.arcs.append(edge_arc(e))
        if arrows:
            scene.arrows.append(Arrow(complex(e.start.base), _unit(complex(e.start.direction))))
            if e.circle.is_point:
                scene.arrows.append(Arrow(complex(e.end.base), _unit(complex(e.end.direction))))
    return scene


# ------------------------------------------------------------------ crossings


def _circle_intersections(c1: complex, r1: float, c2: complex, r2: float, tol: float) -> list[complex] | None:
    """Intersection points, or None for coincident circles."""
    d = abs(c2 - c1)
    if d < tol and abs(r1 - r2) < tol:
        return None
    if d < tol:
        return []
    if d > r1 + r2 + tol or d < abs(r1 - r2) - tol:
        return []
    a = (r1 * r1 - r2 * r2 + d * d) / (2 * d)
    h2 = r1 * r1 - a * a
    u = (c2 - c1) / d
    base = c1 + a * u
    if h2 <= tol * tol:
        return [base]  # tangent within tolerance
    h = math.sqrt(h2)
    return [base + 1j * h * u, base - 1j * h * u]


def _on_arc(arc: Arc, z: complex, tol: float) -> bool:
    if arc.collapsed:
        return abs(z - arc.center) < tol
    if abs(abs(z - arc.center) - arc.radius) > tol:
        return False
    return arc.contains_angle(_angle(z, arc.center), tol / arc.radius)


def common_points(a: Arc, b: Arc, tol: float = 1e-6) -> list[complex]:
    """Points shared by two arcs within tol (samples, for arcs on one circle)."""
    if a.collapsed:
        return [a.center] if _on_arc(b, a.center, tol) else []
    if b.collapsed:
        return [b.center] if _on_arc(a, b.center, tol) else []
    pts = _circle_intersections(a.center, a.radius, b.center, b.radius, tol)
    if pts is None:
        # same circle: sample both arcs densely enough to see any overlap
        samples = [x.point_at(k / 16) for x in (a, b) for k in range(17)]
        return [z for z in samples if _on_arc(a, z, tol) and _on_arc(b, z, tol)]
    return [z for z in pts if _on_arc(a, z, tol) and _on_arc(b, z, tol)]


def arcs_cross(a: Arc, b: Arc, tol: float = 1e-6) -> bool:
    """Whether two arcs share a point (crossing or touching) within tol."""
    return bool(common_points(a, b, tol))


def _junctions(arcs: Sequence[Arc], i: int, j: int) -> list[complex]:
    """Common points of arcs i and j through runs of collapsed arcs: for each
    cyclic direction in which every arc strictly between them is collapsed."""
    n = len(arcs)
    out = []
    for a, b in ((i, j), (j, i)):
        between = [(a + k) % n for k in range(1, (b - a) % n)]
        if between and all(arcs[k].collapsed for k in between):
            out.append(arcs[a].end)
    return out


def find_crossings(scene: RenderScene, tol: float = 1e-6) -> list[tuple[int, int]]:
    """Pairs of non-adjacent edges whose arcs meet.

    Arcs separated only by collapsed arcs meet at the collapsed point; that
    junction is not counted, any other common point is.
    """
    arcs = scene.arcs
    n = len(arcs)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if cyclically_adjacent(i, j, n):
                continue
            joints = _junctions(arcs, i, j)
            pts = common_points(arcs[i], arcs[j], tol)
            if any(all(abs(z - w) >= tol for w in joints) for z in pts):
                out.append((i, j))
    return out


def endpoint_gaps(scene: RenderScene) -> list[float]:
    """Distance between the end of each arc and the start of the next."""
    n = len(scene.arcs)
    return [abs(scene.arcs[k].end - scene.arcs[(k + 1) % n].start) for k in range(n)]


# -------------------------------------------------------------------- frames


def translate_polygon(P: LegendrianPolygon, r) -> LegendrianPolygon:
    return apply_symplectic(P, radial_translation_matrix(r))


def frame_radii(r, frames: int) -> list[Fraction]:
    if frames < 1:
        raise ValueError("frames must be at least 1")
    r = Fraction(r)
    return [r * i / frames for i in range(1, frames + 1)]


def translate_frames(P: LegendrianPolygon, r, frames: int) -> tuple[MobiusMatrix, list[tuple[Fraction, RenderScene]]]:
    """Scenes of T_s P for s = r/frames, 2r/frames, ..., r, all drawn with a
    single repositioning move."""
    radii = frame_radii(r, frames)
    polys = [translate_polygon(P, s) for s in radii]
    M = choose_reposition(polys)
    return M, [(s, polygon_scene(Q, M)) for s, Q in zip(radii, polys)]


@dataclass(frozen=True)
class WitnessTranslate:
    polygon: LegendrianPolygon  # repositioned so the witness circle is a circle in the chart
    edges: tuple[int, int]
    witness_circle: Circle
    r: Fraction  # radial translation collapsing the witness circle

    def translated(self) -> LegendrianPolygon:
        return translate_polygon(self.polygon, self.r)


def witness_translate(P: LegendrianPolygon) -> WitnessTranslate | None:
    """For a non-transverse polygon: the radial translate that collapses the
    circle through an incident pair onto a point."""
    w = incidence_witness(P)
    if w is None:
        return None
    i, j, p, q = w
    for M in REPOSITION_MOVES:
        m = mobius_embed(M)
        circ = lagrangian_to_circle(Lagrangian(matvec(m, p), matvec(m, q)))
        if isinstance(circ, Circle):
            moved = apply_symplectic(P, m)
            if exact_edges(translate_polygon(moved, -circ.c)) is not None:
                return WitnessTranslate(moved, (i, j), circ, -circ.c)
    raise RenderError("witness circle could not be placed in the chart")


# ------------------------------------------------------------------------ SVG


def _fmt(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _bbox(scene: RenderScene) -> tuple[float, float, float, float]:
    xs, ys = [], []

    def add(z: complex):
        xs.append(z.real)
        ys.append(z.imag)

    for a in scene.arcs:
        add(a.start)
        add(a.end)
        if not a.collapsed:
            for s in (0.25, 0.5, 0.75):
                add(a.point_at(s))
            for k in range(4):
                th = k * math.pi / 2
                if a.contains_angle(th):
                    add(a.center + a.radius * cmath.exp(1j * th))
    for c, r in scene.circles:
        add(c + r)
        add(c - r)
        add(c + 1j * r)
        add(c - 1j * r)
    for ar in scene.arrows:
        add(ar.base)
    for z in scene.curve:
        add(z)
    if not xs:
        return -1.0, -1.0, 1.0, 1.0
    return min(xs), min(ys), max(xs), max(ys)


def scene_to_svg(scene: RenderScene, size: int = 600) -> str:
    """SVG 1.1 document; the math y axis points up on screen."""
    x0, y0, x1, y1 = _bbox(scene)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 0.08 * span
    x0, y0 = x0 - pad, y0 - pad
    span += 2 * pad
    s = size / span
    arrow_len = 0.04 * size

    def pt(z: complex) -> str:
        return f"{_fmt((z.real - x0) * s)},{_fmt((y0 + span - z.imag) * s)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for c, r in scene.circles:
        cx, cy = pt(c).split(",")
        lines.append(f'<circle cx="{cx}" cy="{cy}" r="{_fmt(r * s)}" fill="none" stroke="{scene.circle_stroke}" stroke-width="0.8"/>')
    if scene.curve:
        pts = " ".join(pt(z) for z in scene.curve)
        lines.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="1"/>')
    if scene.arcs:
        parts = []
        for a in scene.arcs:
            if a.collapsed:
                continue
            rad = _fmt(a.radius * s)
            large = 1 if abs(a.sweep) > math.pi else 0
            sweep_flag = 0 if a.sweep > 0 else 1  # screen y points down
            if abs(abs(a.sweep) - TAU) < 1e-12:
                mid = a.point_at(0.5)
                parts.append(f"M {pt(a.start)} A {rad} {rad} 0 0 {sweep_flag} {pt(mid)} A {rad} {rad} 0 0 {sweep_flag} {pt(a.end)}")
            else:
                parts.append(f"M {pt(a.start)} A {rad} {rad} 0 {large} {sweep_flag} {pt(a.end)}")
        if parts:
            lines.append(f'<path d="{" ".join(parts)}" fill="none" stroke="{scene.stroke}" stroke-width="1.6"/>')
    for ar in scene.arrows:
        tip = ar.base + ar.direction * (arrow_len / s)
        wing = ar.direction * (0.3 * arrow_len / s)
        left = tip - wing + 1j * wing * 0.6
        right = tip - wing - 1j * wing * 0.6
        lines.append(
            f'<path d="M {pt(ar.base)} L {pt(tip)} M {pt(left)} L {pt(tip)} L {pt(right)}" '
            f'fill="none" stroke="{scene.arrow_stroke}" stroke-width="1.2"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_polygon(P: LegendrianPolygon, size: int = 600) -> str:
    return scene_to_svg(polygon_scene(P), size)


def circles_scene(circles: Iterable[Circle]) -> RenderScene:
    scene = RenderScene()
    for c in circles:
        scene.circles.append((complex(c.center), float(c.radius)))
    return scene
