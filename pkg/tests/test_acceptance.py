"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the summary block at the end
of the session lists every criterion. ``python tests/test_acceptance.py`` runs
the same checks without pytest.
"""
import json
import random
import sys
import time
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

from centroid_bm.certificate import replay
from centroid_bm.cli import random_polygon
from centroid_bm.estimator import estimate_distance, grid_oracle_square_triangle
from centroid_bm.extensions import (
    claim_check,
    conjecture_scan,
    cube_simplex_check,
    medial_triangle,
)
from centroid_bm.figures import reference_triangle
from centroid_bm.geometry import (
    ORIGIN,
    SQUARE,
    AffineMap2,
    DegenerateError,
    P,
    Triangle,
    apply_affine,
    edge_supports,
    gauge_factor,
    polygon_centroid,
)
from centroid_bm.regions import LinearConstraint2 as C
from centroid_bm.regions import region_empty
from centroid_bm.theorem import (
    DELTA0,
    ENTRY_NAMES,
    SECOND_EXTREMAL,
    certify_theorem,
    replay_ledger,
)

RESULTS: dict[int, tuple[str, str]] = {}
HALF = F(5, 2)


@contextmanager
def criterion(n: int, title: str):
    try:
        yield
    except BaseException as exc:
        RESULTS[n] = ("FAIL", f"{title}: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}")
        raise
    RESULTS[n] = ("PASS", title)


def report_lines() -> list[str]:
    return [f"criterion {n}: {RESULTS[n][0]}  {RESULTS[n][1]}" for n in sorted(RESULTS)]


@pytest.fixture(scope="module", autouse=True)
def _summary(request):
    yield
    tr = request.config.pluginmanager.get_plugin("terminalreporter")
    lines = report_lines()
    if tr is not None:
        tr.write_sep("=", "acceptance criteria")
        for line in lines:
            tr.write_line(line)
    else:
        print("\n".join(lines))


def rand_triangle(rng, spread=40, den=7):
    while True:
        try:
            return Triangle(
                *(P(F(rng.randint(-spread, spread), rng.randint(1, den)), F(rng.randint(-spread, spread), rng.randint(1, den))) for _ in range(3))
            )
        except DegenerateError:
            pass


SQUARE_SYMMETRIES = [
    AffineMap2.linear(F(a), F(b), F(c), F(d))
    for a, b, c, d in [
        (1, 0, 0, 1), (0, -1, 1, 0), (-1, 0, 0, -1), (0, 1, -1, 0),
        (1, 0, 0, -1), (-1, 0, 0, 1), (0, 1, 1, 0), (0, -1, -1, 0),
    ]
]


def test_criterion_1_certify():
    with criterion(1, "certify passes, all five entries replay, runtime < 5 s"):
        t0 = time.perf_counter()
        ledger = certify_theorem()
        doc = json.loads(ledger.dumps())
        result = replay_ledger(doc)
        elapsed = time.perf_counter() - t0
        assert ledger.verdict
        assert tuple(e["name"] for e in doc["entries"]) == ENTRY_NAMES
        assert result, f"{result.location}: {result.message}"
        assert elapsed < 5, f"{elapsed:.2f} s"


def test_criterion_2_extremal_gauges():
    with criterion(2, "both extremal triangles have gauge exactly 5/2, supports of the second all 5/2"):
        assert gauge_factor(SQUARE, DELTA0, ORIGIN) == HALF
        assert gauge_factor(SQUARE, SECOND_EXTREMAL, ORIGIN) == HALF
        assert edge_supports(SQUARE, SECOND_EXTREMAL, ORIGIN) == [HALF] * 3


def test_criterion_3_grid_oracle():
    with criterion(3, "grid oracle: 5/2 with witness Delta0 mod symmetry at 4, exactly 5/2 at 16, never below"):
        value, tri = grid_oracle_square_triangle(4)
        assert value == HALF
        images = {frozenset(apply_affine(g, DELTA0).vertices) for g in SQUARE_SYMMETRIES}
        assert frozenset(tri.vertices) in images
        t0 = time.perf_counter()
        value16, _ = grid_oracle_square_triangle(16)
        elapsed = time.perf_counter() - t0
        assert value16 == HALF
        assert elapsed < 60, f"{elapsed:.1f} s"
        for steps in range(3, 16):
            assert grid_oracle_square_triangle(steps)[0] >= HALF, steps


def test_criterion_4_estimator():
    with criterion(4, "estimate(square, triangle) in [2.495, 2.505], reverse within 0.01, < 30 s"):
        t0 = time.perf_counter()
        fwd = estimate_distance(SQUARE, reference_triangle())
        rev = estimate_distance(reference_triangle(), SQUARE)
        elapsed = time.perf_counter() - t0
        assert 2.495 <= fwd.lambda_hat <= 2.505, fwd.lambda_hat
        assert abs(fwd.lambda_hat - rev.lambda_hat) <= 0.01
        assert elapsed < 30, f"{elapsed:.1f} s"


def test_criterion_5_claim():
    with criterion(5, "claim holds on 1000 random triangles; tightness example has gauge 3"):
        rng = random.Random(5)
        for _ in range(1000):
            cert = claim_check(rand_triangle(rng))
            assert cert.verdict
            assert replay(cert.to_json())
        tight = Triangle(P(1, 1), P(-1, 0), P(0, -1))
        assert gauge_factor(SQUARE, tight, ORIGIN) == 3


def test_criterion_6_cube_simplex():
    with criterion(6, "cube in 3 times the inscribed simplex, gauge exactly 3"):
        cert = cube_simplex_check()
        assert cert.verdict
        assert F(cert.step("gauge")["value"]) == 3


def test_criterion_7_conjecture():
    with criterion(7, "medial triangle gauge 4 on 100 triangles; scans of 5 random polygons <= 4 + 1e-9"):
        rng = random.Random(7)
        for _ in range(100):
            T = rand_triangle(rng)
            assert gauge_factor(T, medial_triangle(T), polygon_centroid(T)) == 4
        for seed in range(5):
            m = conjecture_scan(random_polygon(seed), 24)
            assert float(m) <= 4 + 1e-9, (seed, float(m))


def test_criterion_8_property_suites():
    import test_exact
    import test_geometry
    import test_theorem

    with criterion(8, "property suites: planted roots, gauge minimality, equivariance, monotonicity, families"):
        test_exact.test_planted_roots_1000_intervals()
        test_geometry.test_gauge_is_tight_and_minimal()
        test_geometry.test_centroid_affine_equivariance_500()
        test_geometry.test_monotonicity_500_nested_triangles()
        test_theorem.test_case1_family_2000()
        test_theorem.test_case2_family_2000()


def test_criterion_9_negative_controls():
    with criterion(9, "tampered ledger fails replay; weakened Case 1 threshold fails region_empty"):
        tampered = certify_theorem(tamper_case1=True)
        assert not tampered.verdict
        assert tampered.first_failure() == "case1_cover"
        assert not replay_ledger(tampered.to_json())
        doc = json.loads(certify_theorem().dumps())
        doc["entries"][1]["certificate"]["inputs"]["threshold_ac"] = ["1", "-1/2"]
        assert not replay_ledger(doc)
        # region V minus both halfplanes, with (2 - a)/3 swapped for (2 - a)/2
        V = [C.gt(1, 0, 0), C.le(1, 0, 1), C.ge(1, 1, 0), C.le(1, 1, 1)]
        weakened = region_empty(V + [C.gt(F(1, 2), 1, 1), C.gt(3, 1, 2)])
        assert not weakened.verdict, "tampered-ledger half passed; weakened threshold still yields an empty uncovered region"


if __name__ == "__main__":
    sys.path.insert(0, __file__.rsplit("/", 1)[0])
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                pass
    print("\n".join(report_lines()))
    sys.exit(0 if all(s == "PASS" for s, _ in RESULTS.values()) else 1)
