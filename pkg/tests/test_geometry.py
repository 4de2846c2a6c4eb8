import json
import random
from fractions import Fraction as F

import pytest

from centroid_bm.geometry import (
    ORIGIN,
    SQUARE,
    AffineMap2,
    ConvexPolygon,
    DegenerateError,
    GeometryError,
    Line2,
    P,
    Triangle,
    apply_affine,
    contains_point,
    contains_polygon,
    convex_hull,
    edge_supports,
    gauge_factor,
    homothety,
    line_intersection,
    polygon_centroid,
    polygon_from_json,
    read_polygon,
    triangle_from_two_vertices,
    write_polygon,
)

DELTA0 = Triangle.of((1, F(1, 2)), (-1, F(1, 2)), (0, -1))
SECOND = Triangle.of((1, F(1, 5)), (F(-4, 5), F(4, 5)), (F(-1, 5), -1))


def rand_q(rng, span=4, den=9):
    return F(rng.randint(-span * den, span * den), rng.randint(1, den))


def rand_triangle(rng):
    while True:
        try:
            return Triangle(*(P(rand_q(rng), rand_q(rng)) for _ in range(3)))
        except DegenerateError:
            pass


def rand_polygon(rng, k=7):
    while True:
        try:
            return convex_hull([P(rand_q(rng), rand_q(rng)) for _ in range(k)])
        except DegenerateError:
            pass


def rand_map(rng, linear=False):
    while True:
        m = [rand_q(rng, 2, 5) for _ in range(4)]
        t = [F(0), F(0)] if linear else [rand_q(rng), rand_q(rng)]
        A = AffineMap2(*m, *t)
        if A.det != 0:
            return A


# -- centroid, containment ----------------------------------------------------


@pytest.mark.parametrize(
    "poly, g",
    [(SQUARE, P(0, 0)), (DELTA0, P(0, 0)), (Triangle.of((0, 0), (1, 0), (0, 1)), P(F(1, 3), F(1, 3)))],
)
def test_centroid(poly, g):
    assert polygon_centroid(poly) == g


def test_area_centroid_differs_from_vertex_average():
    pent = ConvexPolygon([P(0, 0), P(4, 0), P(4, 1), P(1, 3), P(0, 2)])
    vavg = P(sum(v.x for v in pent) / 5, sum(v.y for v in pent) / 5)
    assert polygon_centroid(pent) != vavg


def test_contains_point_modes():
    assert contains_point(SQUARE, ORIGIN, "open")
    assert not contains_point(SQUARE, P(1, F(1, 2)), "open")
    assert contains_point(SQUARE, P(1, F(1, 2)), "closed")
    assert not contains_point(SQUARE, P(2, 0), "closed")
    with pytest.raises(ValueError):
        contains_point(SQUARE, ORIGIN, "half")


def test_witness_containments():
    big = homothety(DELTA0, ORIGIN, F(5, 2))
    assert contains_polygon(SQUARE, DELTA0, "closed")
    assert contains_polygon(big, SQUARE, "closed")
    assert not contains_polygon(big, SQUARE, "open")


def test_homothety():
    assert homothety(DELTA0, ORIGIN, F(5, 2)).same_as(Triangle.of((F(5, 2), F(5, 4)), (F(-5, 2), F(5, 4)), (0, F(-5, 2))))
    assert homothety(SQUARE, ORIGIN, 1) == SQUARE
    assert homothety(SQUARE, P(1, 1), 2).same_as(ConvexPolygon([P(1, 1), P(-3, 1), P(-3, -3), P(1, -3)]))
    with pytest.raises(GeometryError):
        homothety(SQUARE, ORIGIN, 0)


# -- gauge ---------------------------------------------------------------------


def test_gauge_examples():
    assert gauge_factor(SQUARE, DELTA0, ORIGIN) == F(5, 2)
    assert sorted(edge_supports(SQUARE, DELTA0, ORIGIN)) == [2, F(5, 2), F(5, 2)]
    assert edge_supports(SQUARE, SECOND, ORIGIN) == [F(5, 2)] * 3
    assert gauge_factor(SQUARE, Triangle.of((1, 1), (-1, 0), (0, -1)), ORIGIN) == 3


def test_gauge_needs_interior_center():
    with pytest.raises(GeometryError, match="gauge undefined"):
        gauge_factor(SQUARE, DELTA0, P(1, F(1, 2)))


def test_gauge_is_tight_and_minimal():
    rng = random.Random(1)
    for _ in range(200):
        C, D = rand_polygon(rng), rand_triangle(rng)
        g = polygon_centroid(D)
        lam = gauge_factor(C, D, g)
        assert contains_polygon(homothety(D, g, lam), C)
        assert not contains_polygon(homothety(D, g, lam * F(999, 1000)), C)


def test_gauge_linear_invariance():
    rng = random.Random(2)
    for _ in range(200):
        C, D = rand_polygon(rng), rand_triangle(rng)
        A = rand_map(rng, linear=True)
        Dc = apply_affine(AffineMap2(1, 0, 0, 1, *(-polygon_centroid(D))), D)
        assert gauge_factor(apply_affine(A, C), apply_affine(A, Dc), ORIGIN) == gauge_factor(C, Dc, ORIGIN)


def test_monotonicity_500_nested_triangles():
    # shrinking the body about an interior point can only raise the gauge
    rng = random.Random(3)
    for _ in range(500):
        D2 = rand_triangle(rng)
        g = polygon_centroid(D2)
        inner = []
        for i in range(3):
            t = F(rng.randint(1, 9), 10)
            inner.append(g + (D2.vertices[i] - g) * t)
        D1 = Triangle(*inner)
        C = rand_polygon(rng)
        assert contains_polygon(D2, D1)
        assert gauge_factor(C, D1, g) >= gauge_factor(C, D2, g)


def test_open_containment_implies_closed():
    rng = random.Random(4)
    for _ in range(200):
        A, B = rand_polygon(rng), rand_triangle(rng)
        if contains_polygon(A, B, "open"):
            assert contains_polygon(A, B, "closed")


# -- affine maps and centroids ----------------------------------------------------


def test_centroid_affine_equivariance_500():
    rng = random.Random(5)
    for _ in range(500):
        poly = rand_polygon(rng)
        A = rand_map(rng)
        assert polygon_centroid(apply_affine(A, poly)) == A(polygon_centroid(poly))


def test_apply_affine_examples():
    assert apply_affine(AffineMap2.identity(), SQUARE) == SQUARE
    half = apply_affine(AffineMap2.linear(F(1, 2), 0, 0, F(1, 2)), SQUARE)
    assert max(v.x for v in half) == F(1, 2)
    mirrored = apply_affine(AffineMap2.linear(1, 0, 0, -1), DELTA0)
    assert mirrored.same_as(Triangle.of((1, F(-1, 2)), (-1, F(-1, 2)), (0, 1)))
    with pytest.raises(GeometryError):
        apply_affine(AffineMap2.linear(1, 2, 2, 4), SQUARE)


def test_affine_inverse_and_composition():
    rng = random.Random(6)
    for _ in range(50):
        A = rand_map(rng)
        q = P(rand_q(rng), rand_q(rng))
        assert A.then(A.inverse())(q) == q


# -- constructors ------------------------------------------------------------------


def test_triangle_from_two_vertices():
    assert triangle_from_two_vertices(P(1, F(1, 2)), P(-1, F(1, 2)), ORIGIN).same_as(DELTA0)
    with pytest.raises(DegenerateError, match="degenerate triangle"):
        triangle_from_two_vertices(P(1, 0), P(-1, 0), ORIGIN)
    a, b = F(1, 3), F(1, 4)
    t = triangle_from_two_vertices(P(1, a), P(-1, b), ORIGIN)
    assert P(0, -a - b) in t.vertices


def test_clockwise_input_is_reoriented():
    t = Triangle.of((0, 0), (0, 1), (1, 0))
    assert t.vertices[0] == P(0, 0)
    assert polygon_centroid(t) == P(F(1, 3), F(1, 3))


def test_collinear_vertices_rejected():
    with pytest.raises(DegenerateError, match="collinear"):
        ConvexPolygon([P(0, 0), P(1, 0), P(2, 0), P(1, 1)])


def test_lines():
    assert line_intersection(Line2.vertical(0), Line2.horizontal(0)) == ORIGIN
    assert line_intersection(Line2.horizontal(1), Line2.horizontal(-1)) is None
    # l_b'c' meets x = -1 at y = -(3/2)a - (1/2)b
    a, b = F(1, 4), F(1, 2)
    l = Line2.through(P(F(-5, 2), F(5, 2) * b), P(0, F(-5, 2) * (a + b)))
    assert line_intersection(l, Line2.vertical(-1)).y == -F(3, 2) * a - F(1, 2) * b


def test_line_normal_form():
    l = Line2(F(-2, 3), F(4, 3), F(2))
    assert (l.a, l.b, l.c) == (1, -2, -3)


# -- file format ---------------------------------------------------------------------


def test_polygon_file_round_trip(tmp_path):
    path = tmp_path / "d0.json"
    write_polygon(DELTA0, path)
    assert read_polygon(path) == DELTA0


def test_reader_names_offending_triple():
    doc = {"vertices": [["0/1", "0/1"], ["0/1", "1/1"], ["1/1", "0/1"]]}
    with pytest.raises(GeometryError, match=r"vertex triple \(0, 1, 2\)"):
        polygon_from_json(doc)
    with pytest.raises(GeometryError, match="collinear"):
        polygon_from_json({"vertices": [["0/1", "0/1"], ["1/1", "0/1"], ["2/1", "0/1"], ["1/1", "1/1"]]})


def test_reader_rejects_bad_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{", encoding="utf-8")
    with pytest.raises(GeometryError, match="not valid JSON"):
        read_polygon(p)
    p.write_text(json.dumps({"vertices": [["1/0", "0/1"]] * 3}), encoding="utf-8")
    with pytest.raises(GeometryError):
        read_polygon(p)
