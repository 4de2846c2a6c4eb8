"""Side results around the square/triangle theorem.

* the Claim: a centrally symmetric body M is covered by 3 times any
  inscribed triangle sharing its centroid (checked through the star S(H));
* sampled evidence for the ratio-4 conjecture on arbitrary convex bodies;
* the cube/simplex remark in three dimensions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .certificate import Certificate, build, certificate_kind
from .geometry import (
    ConvexPolygon,
    DegenerateError,
    GeometryError,
    Line2,
    Point2,
    Triangle,
    contains_point,
    contains_polygon,
    convex_hull,
    gauge_factor,
    homothety,
    line_intersection,
    on_boundary,
    orient,
    polygon_centroid,
    reflect_through,
    segment_intersections,
)
from .rational import fmt

__all__ = [
    "Box3",
    "Point3",
    "Simplex3",
    "Star",
    "affine_regular_hexagon",
    "claim_check",
    "claim_scan",
    "conjecture_scan",
    "cube_simplex_check",
    "gauge3",
    "hexagon_hull",
    "inscribed_centroid_triangles",
    "medial_triangle",
    "quarter_triangle",
    "rational_pentagon",
    "scan_report",
    "star_of_triangle",
]

F = Fraction


def _require_centroid(T: Triangle, center: Point2) -> None:
    if polygon_centroid(T) != center:
        raise GeometryError(f"center {center} is not the centroid of the triangle")


# -- the Claim ----------------------------------------------------------------


def hexagon_hull(T: Triangle, center: Point2) -> ConvexPolygon:
    """Hull of T and its point reflection through *center* (an affine-regular hexagon)."""
    _require_centroid(T, center)
    pts = list(T.vertices) + list(reflect_through(T, center).vertices)
    H = convex_hull(pts)
    if len(H) != 6:
        raise DegenerateError("hexagon hull has fewer than 6 vertices")
    return H


@dataclass(frozen=True)
class Star:
    """Union of T_plus and its reflection T_minus through *center*."""

    t_plus: Triangle
    t_minus: Triangle
    center: Point2

    def __contains__(self, q: Point2) -> bool:
        return contains_point(self.t_plus, q) or contains_point(self.t_minus, q)

    def to_json(self) -> dict:
        return {
            "t_plus": [v.to_json() for v in self.t_plus.vertices],
            "t_minus": [v.to_json() for v in self.t_minus.vertices],
            "center": self.center.to_json(),
        }


def star_of_triangle(T: Triangle, center: Point2) -> Star:
    _require_centroid(T, center)
    a, b, c = T.vertices
    a_s, b_s, c_s = (center * 2 - v for v in (a, b, c))
    lines = [Line2.through(a, b_s), Line2.through(b, c_s), Line2.through(c, a_s)]
    pts = []
    for l1, l2 in combinations(lines, 2):
        p = line_intersection(l1, l2)
        if p is None:
            raise DegenerateError("prolonged sides are parallel")
        pts.append(p)
    t_plus = Triangle(*pts)
    return Star(t_plus, reflect_through(t_plus, center), center)


@certificate_kind("claim")
def _claim_builder(inputs: dict) -> tuple[list, bool]:
    T = Triangle(*(Point2.from_json(v) for v in inputs["triangle"]))
    g = polygon_centroid(T)
    H = hexagon_hull(T, g)
    star = star_of_triangle(T, g)
    big = homothety(T, g, 3)
    symmetric = {v for v in H.vertices} == {g * 2 - v for v in H.vertices}
    # H sits in both star triangles, each bounded by three side lines of H
    h_in_plus = contains_polygon(star.t_plus, H)
    h_in_minus = contains_polygon(star.t_minus, H)
    plus_in = contains_polygon(big, star.t_plus)
    minus_in = contains_polygon(big, star.t_minus)
    steps = [
        {"check": "centroid", "point": g.to_json()},
        {"check": "hexagon", "vertices": [v.to_json() for v in H.vertices], "centrally_symmetric": symmetric},
        {"check": "star", **star.to_json()},
        {"check": "hexagon_in_star", "t_plus": h_in_plus, "t_minus": h_in_minus},
        {"check": "star_in_3T", "t_plus": plus_in, "t_minus": minus_in},
    ]
    return steps, symmetric and h_in_plus and h_in_minus and plus_in and minus_in


def claim_check(T: Triangle) -> Certificate:
    """Certify hull(T, -T) within the star S(H) and the star within 3T (about the centroid)."""
    return build("claim", {"triangle": [v.to_json() for v in T.vertices]})


# -- inscribed triangles ------------------------------------------------------


def _is_centrally_symmetric(M: ConvexPolygon, g: Point2) -> bool:
    vs = set(M.vertices)
    return {g * 2 - v for v in vs} == vs


def _boundary_grid(M: ConvexPolygon, per_edge: int) -> list[Point2]:
    out = []
    for p, q in M.edges():
        for k in range(per_edge):
            out.append(p + (q - p) * F(k, per_edge))
    return out


def _partners(M: ConvexPolygon, v1: Point2, g: Point2) -> list[Point2]:
    """All v2 on bd M (overlaps: endpoints and midpoint) with 3g - v1 - v2 on bd M."""
    anchor = g * 3 - v1
    found: list[Point2] = []
    seen: set[Point2] = set()
    for p, q in M.edges():
        for r, s in M.edges():
            hits = segment_intersections(p, q, anchor - r, anchor - s)
            if len(hits) == 2:
                hits.append((hits[0] + hits[1]) * F(1, 2))
            for h in hits:
                if h not in seen:
                    seen.add(h)
                    found.append(h)
    return found


def _inscribed(M: ConvexPolygon, g: Point2, n: int) -> list[Triangle]:
    if n < 1:
        raise ValueError("n must be >= 1")
    # dyadic subdivision so edge midpoints and quarter points are always hit
    per_edge = 1
    while per_edge * len(M) < n:
        per_edge *= 2
    tris: list[Triangle] = []
    keys: set[frozenset] = set()
    for v1 in _boundary_grid(M, per_edge):
        for v2 in _partners(M, v1, g):
            v3 = g * 3 - v1 - v2
            if orient(v1, v2, v3) == 0:
                continue
            key = frozenset((v1, v2, v3))
            if key in keys:
                continue
            # exact re-check; the partner search already implies it
            if not (on_boundary(M, v1) and on_boundary(M, v2) and on_boundary(M, v3)):
                raise ArithmeticError("inscribed triangle left the boundary")
            keys.add(key)
            tris.append(Triangle(v1, v2, v3))
    return tris


def inscribed_centroid_triangles(M: ConvexPolygon, n: int) -> list[Triangle]:
    """Triangles with all vertices on bd M and centroid equal to M's.

    *n* sets the resolution: v1 runs over at least n points of a dyadic
    rational grid on the boundary. For each v1 every partner
    v2 is solved exactly as a point of bd M inside the reflected boundary
    3g - v1 - bd M, so v3 lands on the boundary by construction.
    """
    g = polygon_centroid(M)
    if not _is_centrally_symmetric(M, g):
        raise GeometryError("body is not centrally symmetric about its centroid")
    return _inscribed(M, g, n)


def _scan(C: ConvexPolygon, tris: list[Triangle], g: Point2) -> tuple[Fraction, Triangle]:
    if not tris:
        raise ValueError("family empty at this resolution")
    best, witness = None, None
    for T in tris:
        v = gauge_factor(C, T, g)
        if best is None or v > best:
            best, witness = v, T
    return best, witness


def claim_scan(M: ConvexPolygon, n: int) -> Fraction:
    """Largest gauge of M in a sampled inscribed centroid triangle (at most 3 by the Claim)."""
    return _scan(M, inscribed_centroid_triangles(M, n), polygon_centroid(M))[0]


def conjecture_scan(C: ConvexPolygon, n: int) -> Fraction:
    """Largest gauge of C over sampled inscribed triangles sharing C's centroid."""
    g = polygon_centroid(C)
    return _scan(C, _inscribed(C, g, n), g)[0]


def scan_report(body_name: str, C: ConvexPolygon, n: int, *, symmetric: bool) -> dict:
    g = polygon_centroid(C)
    tris = inscribed_centroid_triangles(C, n) if symmetric else _inscribed(C, g, n)
    best, witness = _scan(C, tris, g)
    report = {
        "body": body_name,
        "vertices": [v.to_json() for v in C.vertices],
        "samples": len(tris),
        "max_gauge": fmt(best),
        "max_gauge_float": float(best),
        "witness_triangle": [v.to_json() for v in witness.vertices],
        "bound": "3/1" if symmetric else "4/1",
        "within_bound": best <= (3 if symmetric else 4),
    }
    if isinstance(C, Triangle):
        # tight example for the conjecture: the medial triangle, not C/4
        report["medial_gauge"] = fmt(gauge_factor(C, medial_triangle(C), g))
        report["quarter_gauge"] = fmt(gauge_factor(C, quarter_triangle(C), g))
    return report


def medial_triangle(C: Triangle) -> Triangle:
    """-(1/2) C about its centroid: the triangle of edge midpoints."""
    g = polygon_centroid(C)
    return homothety(reflect_through(C, g), g, F(1, 2))


def quarter_triangle(C: Triangle) -> Triangle:
    """-(1/4) C about its centroid (not inscribed; gauge 8)."""
    g = polygon_centroid(C)
    return homothety(reflect_through(C, g), g, F(1, 4))


def affine_regular_hexagon() -> ConvexPolygon:
    """Rational affine image of the regular hexagon; gauges are affine invariant."""
    return ConvexPolygon(
        Point2(F(x), F(y)) for x, y in ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))
    )


def rational_pentagon() -> ConvexPolygon:
    """Regular pentagon with vertices rounded to denominators <= 1000 (still convex)."""
    from math import cos, pi, sin

    pts = []
    for k in range(5):
        t = pi / 2 + 2 * pi * k / 5
        pts.append(Point2(F(cos(t)).limit_denominator(1000), F(sin(t)).limit_denominator(1000)))
    return ConvexPolygon(pts)


# -- three dimensions ---------------------------------------------------------


@dataclass(frozen=True)
class Point3:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, F(getattr(self, name)))

    def __add__(self, o: "Point3") -> "Point3":
        return Point3(self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: "Point3") -> "Point3":
        return Point3(self.x - o.x, self.y - o.y, self.z - o.z)

    def __mul__(self, s) -> "Point3":
        return Point3(self.x * s, self.y * s, self.z * s)

    def dot(self, o: "Point3") -> Fraction:
        return self.x * o.x + self.y * o.y + self.z * o.z

    def cross(self, o: "Point3") -> "Point3":
        return Point3(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )

    def to_json(self) -> list[str]:
        return [fmt(self.x), fmt(self.y), fmt(self.z)]


@dataclass(frozen=True)
class Simplex3:
    vertices: tuple[Point3, Point3, Point3, Point3]

    def __post_init__(self):
        if self.volume6 == 0:
            raise DegenerateError("simplex has zero volume")

    @property
    def volume6(self) -> Fraction:
        a, b, c, d = self.vertices
        return (b - a).cross(c - a).dot(d - a)

    @property
    def centroid(self) -> Point3:
        a, b, c, d = self.vertices
        return (a + b + c + d) * F(1, 4)

    def faces(self):
        """(n, p) per face with n the outward normal and p a point of the face."""
        vs = self.vertices
        for k in range(4):
            p, q, r = (vs[i] for i in range(4) if i != k)
            n = (q - p).cross(r - p)
            if n.dot(vs[k] - p) > 0:
                n = n * -1
            yield n, p

    def contains(self, v: Point3) -> bool:
        return all(n.dot(v - p) <= 0 for n, p in self.faces())


@dataclass(frozen=True)
class Box3:
    center: Point3
    half: tuple[Fraction, Fraction, Fraction]

    def vertices(self) -> list[Point3]:
        hx, hy, hz = self.half
        c = self.center
        return [c + Point3(sx * hx, sy * hy, sz * hz) for sx, sy, sz in product((-1, 1), repeat=3)]

    def contains(self, v: Point3) -> bool:
        d = v - self.center
        return abs(d.x) <= self.half[0] and abs(d.y) <= self.half[1] and abs(d.z) <= self.half[2]


def gauge3(box: Box3, simplex: Simplex3, center: Point3) -> tuple[Fraction, list[Fraction]]:
    """Least lambda with box inside center + lambda (simplex - center), plus per-face values."""
    per_face = []
    for n, p in simplex.faces():
        h = n.dot(p - center)
        if h <= 0:
            raise GeometryError("gauge undefined: center is not interior to the simplex")
        per_face.append(max(n.dot(v - center) for v in box.vertices()) / h)
    return max(per_face), per_face


@certificate_kind("cube_simplex")
def _cube_simplex_builder(inputs: dict) -> tuple[list, bool]:
    from .rational import parse

    verts = tuple(Point3(*(parse(c) for c in v)) for v in inputs["simplex"])
    simplex = Simplex3(verts)
    box = Box3(Point3(0, 0, 0), tuple(parse(h) for h in inputs["half_extents"]))
    cen = simplex.centroid
    inside = all(box.contains(v) for v in verts)
    g, per_face = gauge3(box, simplex, cen)
    steps = [
        {"check": "centroid", "point": cen.to_json()},
        {"check": "simplex_in_box", "holds": inside},
        {"check": "face_supports", "values": [fmt(v) for v in per_face]},
        {"check": "gauge", "value": fmt(g)},
    ]
    return steps, cen == box.center and inside and g == 3


def cube_simplex_check() -> Certificate:
    """The cube [-1, 1]^3 lies in 3 times the inscribed regular simplex (about o)."""
    simplex = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    return build(
        "cube_simplex",
        {
            "simplex": [[fmt(F(c)) for c in v] for v in simplex],
            "half_extents": [fmt(F(1))] * 3,
        },
    )
