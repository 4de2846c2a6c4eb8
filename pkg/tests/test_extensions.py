import random
from fractions import Fraction as F

import pytest

from centroid_bm.cli import random_polygon
from centroid_bm.extensions import (
    affine_regular_hexagon,
    claim_check,
    claim_scan,
    conjecture_scan,
    cube_simplex_check,
    hexagon_hull,
    inscribed_centroid_triangles,
    medial_triangle,
    quarter_triangle,
    rational_pentagon,
    star_of_triangle,
)
from centroid_bm.geometry import (
    ORIGIN,
    SQUARE,
    DegenerateError,
    GeometryError,
    P,
    Triangle,
    contains_polygon,
    gauge_factor,
    homothety,
    on_boundary,
    polygon_centroid,
)

T_EQ = Triangle.of((1, 0), (F(-1, 2), 1), (F(-1, 2), -1))
DELTA0 = Triangle.of((1, F(1, 2)), (-1, F(1, 2)), (0, -1))


def rand_triangle(rng):
    while True:
        try:
            return Triangle(*(P(F(rng.randint(-60, 60), rng.randint(1, 7)), F(rng.randint(-60, 60), rng.randint(1, 7))) for _ in range(3)))
        except DegenerateError:
            pass


def test_hexagon_hull_examples():
    H = hexagon_hull(T_EQ, ORIGIN)
    assert set(H.vertices) == set(T_EQ.vertices) | {-v for v in T_EQ.vertices}
    H0 = hexagon_hull(DELTA0, ORIGIN)
    assert len(H0) == 6 and P(0, 1) in H0.vertices
    with pytest.raises(GeometryError):
        hexagon_hull(T_EQ, P(1, 1))


def test_star_of_equilateral_like_triangle():
    star = star_of_triangle(T_EQ, ORIGIN)
    assert star.t_plus.same_as(Triangle.of((F(3, 2), 1), (F(-3, 2), 1), (0, -2)))
    assert polygon_centroid(star.t_plus) == ORIGIN
    assert all(-v in star.t_minus.vertices for v in star.t_plus.vertices)


def test_chain_hexagon_star_three_triangle():
    rng = random.Random(21)
    for _ in range(200):
        T = rand_triangle(rng)
        g = polygon_centroid(T)
        H, star = hexagon_hull(T, g), star_of_triangle(T, g)
        assert all(v in star for v in H.vertices)
        big = homothety(T, g, 3)
        assert contains_polygon(big, star.t_plus) and contains_polygon(big, star.t_minus)
        assert {g * 2 - v for v in H.vertices} == set(H.vertices)


def test_claim_check_and_tightness():
    assert claim_check(T_EQ).verdict
    assert gauge_factor(SQUARE, Triangle.of((1, 1), (-1, 0), (0, -1)), ORIGIN) == 3


def test_inscribed_family_on_square():
    tris = inscribed_centroid_triangles(SQUARE, 300)
    sets = [set(t.vertices) for t in tris]
    assert set(DELTA0.vertices) in sets
    assert {P(1, 1), P(-1, 0), P(0, -1)} in sets
    # v1 = (1, 0), v2 = (0, 1) forces v3 = (-1, -1)
    assert {P(1, 0), P(0, 1), P(-1, -1)} in sets
    for t in tris:
        assert polygon_centroid(t) == ORIGIN
        assert all(on_boundary(SQUARE, v) for v in t.vertices)


def test_claim_scan_values():
    assert claim_scan(SQUARE, 200) == 3
    assert claim_scan(affine_regular_hexagon(), 200) <= 3


def test_claim_scan_needs_symmetry():
    with pytest.raises(GeometryError):
        claim_scan(rational_pentagon(), 10)


def test_symmetric_bodies_agree_with_claim_scan():
    for M in (SQUARE, affine_regular_hexagon()):
        assert conjecture_scan(M, 120) == claim_scan(M, 120)


def test_medial_triangle_gauge_four():
    rng = random.Random(22)
    for _ in range(100):
        T = rand_triangle(rng)
        g = polygon_centroid(T)
        assert gauge_factor(T, medial_triangle(T), g) == 4
        assert gauge_factor(T, quarter_triangle(T), g) == 8


def test_conjecture_fails_for_triangle_bodies():
    # v1 at a vertex, v2 and v3 symmetric about the midpoint of the opposite side:
    # an inscribed centroid triangle that gets arbitrarily thin
    T = Triangle.of((-1, -1), (1, -1), (0, 1))
    g = polygon_centroid(T)
    thin = Triangle(P(0, 1), P(F(-1, 10), -1), P(F(1, 10), -1))
    assert polygon_centroid(thin) == g
    assert gauge_factor(T, thin, g) > 4
    assert conjecture_scan(T, 100) > 4


def test_pentagon_and_random_bodies_below_four():
    assert conjecture_scan(rational_pentagon(), 100) <= 4
    for seed in range(3):
        assert conjecture_scan(random_polygon(seed), 60) <= 4


def test_cube_simplex():
    cert = cube_simplex_check()
    assert cert.verdict
    assert cert.step("gauge")["value"] == "3/1"
    assert cert.step("centroid")["point"] == ["0/1", "0/1", "0/1"]
    assert cert.step("simplex_in_box")["holds"]
