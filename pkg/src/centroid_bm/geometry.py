"""Exact planar convex geometry over the rationals."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .rational import RationalLike, as_q, fmt, parse

__all__ = [
    "AffineMap2",
    "ConvexPolygon",
    "DegenerateError",
    "GeometryError",
    "Line2",
    "ORIGIN",
    "P",
    "Point2",
    "SQUARE",
    "Triangle",
    "apply_affine",
    "contains_point",
    "contains_polygon",
    "convex_hull",
    "edge_supports",
    "gauge_factor",
    "homothety",
    "line_intersection",
    "on_boundary",
    "orient",
    "polygon_from_json",
    "polygon_area",
    "polygon_centroid",
    "read_polygon",
    "reflect_through",
    "segment_intersections",
    "triangle_from_two_vertices",
    "write_polygon",
]


class GeometryError(ValueError):
    pass


class DegenerateError(GeometryError):
    pass


@dataclass(frozen=True, slots=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_q(self.x))
        object.__setattr__(self, "y", as_q(self.y))

    def __add__(self, o: "Point2") -> "Point2":
        return Point2(self.x + o.x, self.y + o.y)

    def __sub__(self, o: "Point2") -> "Point2":
        return Point2(self.x - o.x, self.y - o.y)

    def __mul__(self, s: RationalLike) -> "Point2":
        s = as_q(s)
        return Point2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Point2":
        return Point2(-self.x, -self.y)

    def __iter__(self) -> Iterator[Fraction]:
        yield self.x
        yield self.y

    def dot(self, o: "Point2") -> Fraction:
        return self.x * o.x + self.y * o.y

    def cross(self, o: "Point2") -> Fraction:
        return self.x * o.y - self.y * o.x

    def to_json(self) -> list[str]:
        return [fmt(self.x), fmt(self.y)]

    @classmethod
    def from_json(cls, doc: Sequence[str]) -> "Point2":
        if len(doc) != 2:
            raise ValueError(f"point needs 2 coordinates, got {len(doc)}")
        return cls(parse(doc[0]), parse(doc[1]))

    def __repr__(self) -> str:
        return f"Point2({self.x}, {self.y})"


def P(x: RationalLike, y: RationalLike) -> Point2:
    return Point2(as_q(x), as_q(y))


ORIGIN = Point2(Fraction(0), Fraction(0))


def orient(a: Point2, b: Point2, c: Point2) -> Fraction:
    """Twice the signed area of abc; positive for a left turn."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


@dataclass(frozen=True, slots=True)
class Line2:
    """``a*x + b*y = c`` with coprime integer coefficients, first of (a, b) positive."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = as_q(self.a), as_q(self.b), as_q(self.c)
        if a == 0 and b == 0:
            raise GeometryError("line needs (a, b) != (0, 0)")
        den = lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = int(a * den), int(b * den), int(c * den)
        g = gcd(gcd(ia, ib), ic)
        if (ia or ib) and (ia < 0 or (ia == 0 and ib < 0)):
            g = -g
        object.__setattr__(self, "a", Fraction(ia // g))
        object.__setattr__(self, "b", Fraction(ib // g))
        object.__setattr__(self, "c", Fraction(ic // g))

    @classmethod
    def through(cls, p: Point2, q: Point2) -> "Line2":
        if p == q:
            raise DegenerateError("line through a single point")
        a = q.y - p.y
        b = p.x - q.x
        return cls(a, b, a * p.x + b * p.y)

    @classmethod
    def vertical(cls, x0: RationalLike) -> "Line2":
        return cls(Fraction(1), Fraction(0), as_q(x0))

    @classmethod
    def horizontal(cls, y0: RationalLike) -> "Line2":
        return cls(Fraction(0), Fraction(1), as_q(y0))

    def value(self, p: Point2) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: Point2) -> bool:
        return self.value(p) == 0

    def y_at(self, x: RationalLike) -> Fraction | None:
        return None if self.b == 0 else (self.c - self.a * as_q(x)) / self.b

    def x_at(self, y: RationalLike) -> Fraction | None:
        return None if self.a == 0 else (self.c - self.b * as_q(y)) / self.a

    def meets_segment(self, p: Point2, q: Point2) -> bool:
        vp, vq = self.value(p), self.value(q)
        return (vp <= 0 <= vq) or (vq <= 0 <= vp)

    def meets_polygon(self, poly: "ConvexPolygon") -> bool:
        vals = [self.value(v) for v in poly.vertices]
        return min(vals) <= 0 <= max(vals)


def line_intersection(l1: Line2, l2: Line2) -> Point2 | None:
    """Intersection point, or None for parallel (including coincident) lines."""
    det = l1.a * l2.b - l1.b * l2.a
    if det == 0:
        return None
    return Point2((l1.c * l2.b - l1.b * l2.c) / det, (l1.a * l2.c - l1.c * l2.a) / det)


class ConvexPolygon:
    """Strictly convex polygon, vertices stored counterclockwise.

    Clockwise input is reversed (keeping the first vertex first). Collinear
    or reflex vertex triples are rejected.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Point2]):
        vs = [v if isinstance(v, Point2) else Point2(*v) for v in vertices]
        if len(vs) < 3:
            raise DegenerateError(f"polygon needs at least 3 vertices, got {len(vs)}")
        if _signed_area2(vs) < 0:
            vs = [vs[0]] + vs[:0:-1]
        _check_strictly_convex(vs)
        object.__setattr__(self, "vertices", tuple(vs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Point2]:
        return iter(self.vertices)

    def edges(self) -> Iterator[tuple[Point2, Point2]]:
        vs = self.vertices
        for i in range(len(vs)):
            yield vs[i], vs[(i + 1) % len(vs)]

    def same_as(self, other: "ConvexPolygon") -> bool:
        """Equal as point sets (same vertices, any starting vertex)."""
        return set(self.vertices) == set(other.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, ConvexPolygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(f'({v.x}, {v.y})' for v in self.vertices)})"

    def to_json(self) -> dict:
        return {"vertices": [v.to_json() for v in self.vertices]}


def _signed_area2(vs: Sequence[Point2]) -> Fraction:
    n = len(vs)
    return sum((vs[i].cross(vs[(i + 1) % n]) for i in range(n)), Fraction(0))


def _check_strictly_convex(vs: Sequence[Point2]) -> None:
    # every vertex strictly left of every edge: also rules out self-winding
    n = len(vs)
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        for j in range(n):
            if j == i or j == (i + 1) % n:
                continue
            turn = orient(a, b, vs[j])
            if turn <= 0:
                raise DegenerateError(
                    f"vertex triple ({i}, {(i + 1) % n}, {j}) = ({a.x}, {a.y}), ({b.x}, {b.y}), "
                    f"({vs[j].x}, {vs[j].y}) is {'collinear' if turn == 0 else 'not convex'}"
                )


class Triangle(ConvexPolygon):
    __slots__ = ()

    def __init__(self, a: Point2, b: Point2, c: Point2):
        if orient(a, b, c) == 0:
            raise DegenerateError("degenerate triangle")
        super().__init__([a, b, c])

    @property
    def a(self) -> Point2:
        return self.vertices[0]

    @property
    def b(self) -> Point2:
        return self.vertices[1]

    @property
    def c(self) -> Point2:
        return self.vertices[2]

    @classmethod
    def of(cls, *coords: tuple[RationalLike, RationalLike]) -> "Triangle":
        return cls(*(P(x, y) for x, y in coords))


SQUARE = ConvexPolygon([P(1, -1), P(1, 1), P(-1, 1), P(-1, -1)])


def polygon_area(poly: ConvexPolygon) -> Fraction:
    return _signed_area2(poly.vertices) / 2


def polygon_centroid(poly: ConvexPolygon) -> Point2:
    """Area centroid."""
    vs = poly.vertices
    if len(vs) == 3:
        return Point2(sum(v.x for v in vs) / 3, sum(v.y for v in vs) / 3)
    n = len(vs)
    a2 = Fraction(0)
    cx = cy = Fraction(0)
    for i in range(n):
        p, q = vs[i], vs[(i + 1) % n]
        w = p.cross(q)
        a2 += w
        cx += (p.x + q.x) * w
        cy += (p.y + q.y) * w
    return Point2(cx / (3 * a2), cy / (3 * a2))


def contains_point(poly: ConvexPolygon, q: Point2, mode: str = "closed") -> bool:
    if mode not in ("closed", "open"):
        raise ValueError(f"mode must be 'closed' or 'open', got {mode!r}")
    for a, b in poly.edges():
        s = orient(a, b, q)
        if s < 0 or (s == 0 and mode == "open"):
            return False
    return True


def contains_polygon(outer: ConvexPolygon, inner: ConvexPolygon, mode: str = "closed") -> bool:
    return all(contains_point(outer, v, mode) for v in inner.vertices)


def on_boundary(poly: ConvexPolygon, q: Point2) -> bool:
    return contains_point(poly, q, "closed") and not contains_point(poly, q, "open")


def _map_vertices(poly: ConvexPolygon, fn) -> ConvexPolygon:
    vs = [fn(v) for v in poly.vertices]
    if isinstance(poly, Triangle):
        return Triangle(*vs)
    return ConvexPolygon(vs)


def homothety(poly: ConvexPolygon, center: Point2, ratio: RationalLike) -> ConvexPolygon:
    ratio = as_q(ratio)
    if ratio <= 0:
        raise GeometryError(f"homothety ratio must be positive, got {ratio}")
    return _map_vertices(poly, lambda v: center + (v - center) * ratio)


def reflect_through(poly: ConvexPolygon, center: Point2) -> ConvexPolygon:
    """Point reflection v -> 2*center - v (orientation is preserved)."""
    return _map_vertices(poly, lambda v: center * 2 - v)


def edge_supports(outer: ConvexPolygon, body: ConvexPolygon, center: Point2) -> list[Fraction]:
    """For each edge of *body* (n.x <= h about *center*), max over outer's vertices of n.v / h.

    The gauge of *outer* in *body* is the maximum of these.
    """
    out = []
    for p, q in body.edges():
        n = Point2(q.y - p.y, p.x - q.x)  # outward for counterclockwise order
        h = n.dot(p - center)
        if h <= 0:
            raise GeometryError("gauge undefined: center is not interior to the body")
        out.append(max(n.dot(v - center) for v in outer.vertices) / h)
    return out


def gauge_factor(outer: ConvexPolygon, body: ConvexPolygon, center: Point2) -> Fraction:
    """Least lambda > 0 with ``outer`` inside ``homothety(body, center, lambda)``."""
    if not contains_point(body, center, "open"):
        raise GeometryError("gauge undefined: center is not interior to the body")
    return max(edge_supports(outer, body, center))


def triangle_from_two_vertices(v1: Point2, v2: Point2, g: Point2) -> Triangle:
    """The triangle with vertices v1, v2 and centroid g."""
    return Triangle(v1, v2, g * 3 - v1 - v2)


@dataclass(frozen=True, slots=True)
class AffineMap2:
    m11: Fraction
    m12: Fraction
    m21: Fraction
    m22: Fraction
    t1: Fraction = Fraction(0)
    t2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("m11", "m12", "m21", "m22", "t1", "t2"):
            object.__setattr__(self, name, as_q(getattr(self, name)))

    @classmethod
    def identity(cls) -> "AffineMap2":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def linear(cls, m11, m12, m21, m22) -> "AffineMap2":
        return cls(as_q(m11), as_q(m12), as_q(m21), as_q(m22))

    @property
    def det(self) -> Fraction:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __call__(self, p: Point2) -> Point2:
        return Point2(
            self.m11 * p.x + self.m12 * p.y + self.t1,
            self.m21 * p.x + self.m22 * p.y + self.t2,
        )

    def then(self, other: "AffineMap2") -> "AffineMap2":
        """Composition: apply self first, then *other*."""
        return AffineMap2(
            other.m11 * self.m11 + other.m12 * self.m21,
            other.m11 * self.m12 + other.m12 * self.m22,
            other.m21 * self.m11 + other.m22 * self.m21,
            other.m21 * self.m12 + other.m22 * self.m22,
            other.m11 * self.t1 + other.m12 * self.t2 + other.t1,
            other.m21 * self.t1 + other.m22 * self.t2 + other.t2,
        )

    def inverse(self) -> "AffineMap2":
        d = self.det
        if d == 0:
            raise GeometryError("singular affine map")
        i11, i12, i21, i22 = self.m22 / d, -self.m12 / d, -self.m21 / d, self.m11 / d
        return AffineMap2(i11, i12, i21, i22, -(i11 * self.t1 + i12 * self.t2), -(i21 * self.t1 + i22 * self.t2))

    def to_json(self) -> dict:
        return {
            "linear": [[fmt(self.m11), fmt(self.m12)], [fmt(self.m21), fmt(self.m22)]],
            "translation": [fmt(self.t1), fmt(self.t2)],
        }


def apply_affine(A: AffineMap2, poly: ConvexPolygon) -> ConvexPolygon:
    if A.det == 0:
        raise GeometryError("singular affine map")
    # ConvexPolygon reorients a reflected (clockwise) image itself
    return _map_vertices(poly, A)


def convex_hull(points: Iterable[Point2]) -> ConvexPolygon:
    """Strictly convex hull (collinear boundary points dropped)."""
    pts = sorted(set(points), key=lambda p: (p.x, p.y))
    if len(pts) < 3:
        raise DegenerateError("hull of fewer than 3 distinct points")

    def half(seq):
        h: list[Point2] = []
        for p in seq:
            while len(h) >= 2 and orient(h[-2], h[-1], p) <= 0:
                h.pop()
            h.append(p)
        return h

    lower, upper = half(pts), half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateError("points are collinear")
    return ConvexPolygon(hull)


def segment_intersections(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> list[Point2]:
    """Common points of two closed segments: none, one point, or overlap endpoints."""
    r, s = p2 - p1, q2 - q1
    denom = r.cross(s)
    qp = q1 - p1
    if denom != 0:
        t = qp.cross(s) / denom
        u = qp.cross(r) / denom
        if 0 <= t <= 1 and 0 <= u <= 1:
            return [p1 + r * t]
        return []
    if qp.cross(r) != 0:
        return []
    # collinear: project on r
    rr = r.dot(r)
    t0 = qp.dot(r) / rr
    t1 = (q2 - p1).dot(r) / rr
    lo, hi = max(Fraction(0), min(t0, t1)), min(Fraction(1), max(t0, t1))
    if lo > hi:
        return []
    if lo == hi:
        return [p1 + r * lo]
    return [p1 + r * lo, p1 + r * hi]


def polygon_from_json(doc: dict) -> ConvexPolygon:
    """Strict reader for ``{"vertices": [["num/den", "num/den"], ...]}``.

    Vertices must already be counterclockwise and strictly convex; the error
    names the offending vertex triple.
    """
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise GeometryError("polygon document needs a 'vertices' list")
    try:
        vs = [Point2.from_json(v) for v in doc["vertices"]]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise GeometryError(f"bad vertex: {exc}") from None
    n = len(vs)
    if n < 3:
        raise GeometryError(f"polygon needs at least 3 vertices, got {n}")
    for i in range(n):
        a, b, c = vs[i], vs[(i + 1) % n], vs[(i + 2) % n]
        if orient(a, b, c) <= 0:
            kind = "collinear" if orient(a, b, c) == 0 else "clockwise"
            raise GeometryError(
                f"vertex triple ({i}, {(i + 1) % n}, {(i + 2) % n}) = "
                f"({a.x}, {a.y}), ({b.x}, {b.y}), ({c.x}, {c.y}) is {kind}; "
                "expected a strict counterclockwise turn"
            )
    try:
        return ConvexPolygon(vs)
    except DegenerateError as exc:
        raise GeometryError(str(exc)) from None


def read_polygon(path: str | Path) -> ConvexPolygon:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GeometryError(f"{path}: not valid JSON ({exc})") from None
    return polygon_from_json(doc)


def write_polygon(poly: ConvexPolygon, path: str | Path) -> None:
    Path(path).write_text(json.dumps(poly.to_json(), indent=2) + "\n", encoding="utf-8")
