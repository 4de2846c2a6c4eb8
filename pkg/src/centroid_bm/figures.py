"""SVG renderings of the case analysis, computed from module data.

Geometric figures map [-3, 3]^2 onto the canvas. Parameter-plane figures
(regions V and W) use their own window so the unit-size regions stay legible.
Exact coordinates of marked points and drawn polygons are kept in
``data-*`` attributes so tests can read them back without parsing paths.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from . import __version__
from .estimator import estimate_distance
from .geometry import (
    ORIGIN,
    SQUARE,
    ConvexPolygon,
    Line2,
    Point2,
    Triangle,
    apply_affine,
    homothety,
    polygon_centroid,
)
from .rational import fmt
from .theorem import (
    DELTA0,
    RATIO,
    SECOND_EXTREMAL,
    Case1Params,
    Case2Params,
    case1_scaled_lines,
    case1_triangle,
    case2_scaled_lines,
    case2_thresholds,
    case2_triangle,
)

__all__ = ["FIGURES", "emit_figures", "reference_triangle"]

HEADER = f"<!-- centroid_bm figure generator {__version__} -->"
SIZE = 480
F = Fraction

# stroke conventions: a'c'-type solid, b'c'-type dashed, a'b'-type dotted
STROKES = {"ac": "", "bc": ' stroke-dasharray="8 5"', "ab": ' stroke-dasharray="2 4"'}


@dataclass(frozen=True)
class Viewport:
    x0: float
    x1: float
    y0: float
    y1: float

    def map(self, x, y) -> tuple[float, float]:
        u = (float(x) - self.x0) / (self.x1 - self.x0) * SIZE
        v = (self.y1 - float(y)) / (self.y1 - self.y0) * SIZE
        return round(u, 3), round(v, 3)


GEOMETRY = Viewport(-3, 3, -3, 3)
PLANE_V = Viewport(-0.25, 1.25, -1.25, 1.25)
PLANE_W = Viewport(-0.25, 1.25, -1.25, 0.25)


class _Svg:
    def __init__(self, title: str, view: Viewport):
        self.view = view
        self.parts = [
            HEADER,
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
            f'viewBox="0 0 {SIZE} {SIZE}">',
            f"<title>{title}</title>",
            '<rect width="100%" height="100%" fill="white"/>',
        ]

    def _pts(self, pts: Iterable[tuple]) -> str:
        return " ".join("%g,%g" % self.view.map(x, y) for x, y in pts)

    def polygon(self, poly: ConvexPolygon, name: str, stroke="black", fill="none", dash=""):
        exact = " ".join(f"{fmt(v.x)},{fmt(v.y)}" for v in poly.vertices)
        self.parts.append(
            f'<polygon class="{name}" data-vertices="{exact}" points="{self._pts((v.x, v.y) for v in poly.vertices)}" '
            f'stroke="{stroke}" fill="{fill}" fill-opacity="0.15"{dash}/>'
        )

    def polyline(self, pts: Sequence[tuple], name: str, dash="", stroke="black"):
        if len(pts) >= 2:
            self.parts.append(
                f'<polyline class="{name}" points="{self._pts(pts)}" stroke="{stroke}" fill="none"{dash}/>'
            )

    def line(self, ln: Line2, name: str, dash=""):
        v = self.view
        pts = []
        for x in (v.x0, v.x1):
            y = ln.y_at(F(x))
            if y is not None and v.y0 <= y <= v.y1:
                pts.append((F(x), y))
        for y in (v.y0, v.y1):
            x = ln.x_at(F(y))
            if x is not None and v.x0 <= x <= v.x1:
                pts.append((x, F(y)))
        pts = sorted(set(pts))
        if len(pts) >= 2:
            self.polyline([pts[0], pts[-1]], name, dash)

    def mark(self, x: Fraction, y: Fraction, label: str):
        u, w = self.view.map(x, y)
        self.parts.append(
            f'<circle class="marked" data-x="{fmt(x)}" data-y="{fmt(y)}" cx="{u:g}" cy="{w:g}" r="4" fill="red"/>'
        )
        self.parts.append(f'<text x="{u + 6:g}" y="{w - 6:g}" font-size="12">{label}</text>')

    def axes(self):
        v = self.view
        self.polyline([(v.x0, 0), (v.x1, 0)], "axis", stroke="#999")
        self.polyline([(0, v.y0), (0, v.y1)], "axis", stroke="#999")

    def text(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def _triangle_with_image(svg: _Svg, T: Triangle, name: str, colour: str):
    svg.polygon(T, name, stroke=colour, fill=colour)
    svg.polygon(homothety(T, ORIGIN, RATIO), f"{name}-scaled", stroke=colour, dash=' stroke-dasharray="1 3"')


def fig1() -> str:
    p = Case1Params(F(1, 4), F(1, 2))
    svg = _Svg("Case 1: a on the right side, b on the left side", GEOMETRY)
    svg.axes()
    svg.polygon(SQUARE, "square")
    _triangle_with_image(svg, case1_triangle(p), "triangle", "blue")
    l_ac, l_bc = case1_scaled_lines(p)
    svg.line(l_ac, "line-ac", STROKES["ac"])
    svg.line(l_bc, "line-bc", STROKES["bc"])
    return svg.text()


def fig2() -> str:
    svg = _Svg("Region V covered by the two threshold lines", PLANE_V)
    svg.axes()
    V = ConvexPolygon([Point2(F(0), F(0)), Point2(F(1), F(-1)), Point2(F(1), F(0)), Point2(F(0), F(1))])
    svg.polygon(V, "region-V", fill="#ccc")
    svg.line(Line2(F(1), F(3), F(2)), "threshold-ac", STROKES["ac"])  # beta = (2 - alpha)/3
    svg.line(Line2(F(3), F(1), F(2)), "threshold-bc", STROKES["bc"])  # beta = 2 - 3 alpha
    svg.mark(F(1, 2), F(1, 2), "(1/2, 1/2)")
    return svg.text()


def fig3() -> str:
    p = Case2Params(F(3, 4), F(-1, 2))
    svg = _Svg("Case 2: a on the right side, c on the bottom side", GEOMETRY)
    svg.axes()
    svg.polygon(SQUARE, "square")
    _triangle_with_image(svg, case2_triangle(p), "triangle", "blue")
    for key, ln in zip(("ab", "bc", "ac"), case2_scaled_lines(p)):
        svg.line(ln, f"line-{key}", STROKES[key])
    return svg.text()


def _curve(idx: int, lo: Fraction, hi: Fraction, samples: int = 200) -> list[tuple[Fraction, Fraction]]:
    pts = []
    for k in range(samples + 1):
        a = lo + (hi - lo) * F(k, samples)
        if a == 0:
            continue
        try:
            g = case2_thresholds(a)[idx]
        except ZeroDivisionError:
            continue
        if -1 <= g <= 0:
            pts.append((a, g))
    return pts


def fig4() -> str:
    svg = _Svg("Region W with the three covering curves", PLANE_W)
    svg.axes()
    W = ConvexPolygon([Point2(F(0), F(-1)), Point2(F(1), F(-1)), Point2(F(1), F(0)), Point2(F(0), F(0))])
    svg.polygon(W, "region-W", fill="#ccc")
    svg.polyline(_curve(0, F(0), F(2, 5) - F(1, 1000)), "curve-ab", STROKES["ab"])
    svg.polyline(_curve(1, F(0), F(4, 5) - F(1, 1000)), "curve-bc", STROKES["bc"])
    svg.polyline(_curve(2, F(0), F(1)), "curve-ac", STROKES["ac"])
    svg.mark(F(1, 5), F(-1, 5), "(1/5, -1/5)")
    return svg.text()


def fig5() -> str:
    svg = _Svg("The two extremal triangles in S", GEOMETRY)
    svg.axes()
    svg.polygon(SQUARE, "square")
    _triangle_with_image(svg, DELTA0, "delta0", "blue")
    _triangle_with_image(svg, SECOND_EXTREMAL, "second", "green")
    return svg.text()


def reference_triangle() -> Triangle:
    return Triangle(Point2(F(-1), F(-1)), Point2(F(1), F(-1)), Point2(F(0), F(1)))


def fig6() -> str:
    T = reference_triangle()
    est = estimate_distance(T, SQUARE)
    inner = apply_affine(est.best_map, SQUARE)
    outer = homothety(inner, polygon_centroid(T), est.exact_lambda)
    svg = _Svg("Square between a triangle and its scaled copy", GEOMETRY)
    svg.axes()
    svg.polygon(T, "triangle", stroke="blue", fill="blue")
    svg.polygon(inner, "square-image", stroke="green", fill="green")
    svg.polygon(outer, "square-image-scaled", stroke="green", dash=' stroke-dasharray="1 3"')
    svg.parts.append(f'<desc data-lambda="{fmt(est.exact_lambda)}">estimated ratio {float(est.exact_lambda):.6f}</desc>')
    return svg.text()


FIGURES = {
    "fig1_case1.svg": fig1,
    "fig2_region_V.svg": fig2,
    "fig3_case2.svg": fig3,
    "fig4_region_W.svg": fig4,
    "fig5_extremal.svg": fig5,
    "fig6_dual.svg": fig6,
}


def emit_figures(outdir: str | Path) -> list[Path]:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, make in FIGURES.items():
        path = out / name
        path.write_text(make(), encoding="utf-8")
        written.append(path)
    return written
