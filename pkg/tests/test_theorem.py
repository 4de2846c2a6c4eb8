import copy
import json
import random
from fractions import Fraction as F

import pytest

from centroid_bm.certificate import replay
from centroid_bm.geometry import ORIGIN, SQUARE, DegenerateError, P, Triangle, gauge_factor, polygon_centroid
from centroid_bm.regions import LinearConstraint2 as C
from centroid_bm.regions import region_empty
from centroid_bm.theorem import (
    DELTA0,
    ENTRY_NAMES,
    SECOND_EXTREMAL,
    Case1Params,
    Case2Params,
    alpha_zero_triangle,
    case1_cover,
    case1_scaled_lines,
    case1_triangle,
    case2_cover,
    case2_thresholds,
    case2_triangle,
    certify_theorem,
    replay_ledger,
    subcase_alpha_zero,
    witness_check,
)


@pytest.fixture(scope="module")
def ledger():
    return certify_theorem()


# -- parameter families -----------------------------------------------------------


def test_case1_triangle_examples():
    assert case1_triangle(Case1Params(F(1, 2), F(1, 2))).same_as(DELTA0)
    with pytest.raises(DegenerateError):
        case1_triangle(Case1Params(F(1, 2), F(-1, 2)))
    with pytest.raises(ValueError):
        Case1Params(F(0), F(0))


def test_case2_triangle_examples():
    assert case2_triangle(Case2Params(F(1, 5), F(-1, 5))).same_as(SECOND_EXTREMAL)
    assert case2_triangle(Case2Params(F(1, 2), F(0))).same_as(DELTA0)
    with pytest.raises(DegenerateError):
        case2_triangle(Case2Params(F(1), F(-1)))


def test_case1_lines_hit_expected_sides():
    # alpha = 1/4, beta = 1/2: f = (-1, -5/8) lies on the left side
    l_ac, l_bc = case1_scaled_lines(Case1Params(F(1, 4), F(1, 2)))
    assert l_bc.meets_segment(P(-1, -1), P(-1, 1))
    assert l_bc.x_at(F(-5, 8)) == -1


def test_thresholds():
    assert case2_thresholds(F(1, 5)) == (F(-1, 5),) * 3
    g_ab, g_bc, g_ac = case2_thresholds(F(1, 4))
    assert g_ab == 0
    assert case2_thresholds(F(1, 2))[1:] == (0, 0)
    assert case2_thresholds(F(3, 4))[2] == F(2, 23)
    for pole in (F(2, 5), F(4, 5)):
        with pytest.raises(ZeroDivisionError, match="threshold undefined"):
            case2_thresholds(pole)


def rand_case1(rng):
    a = F(rng.randint(1, 400), 400)
    while True:
        b = -a + F(rng.randint(0, 400), 400)
        if -a < b <= 1 - a:
            return Case1Params(a, b)


def rand_case2(rng):
    return Case2Params(F(rng.randint(1, 397), 397), F(-rng.randint(0, 401), 401))


def test_case1_family_2000():
    rng = random.Random(11)
    for _ in range(2000):
        p = rand_case1(rng)
        t = case1_triangle(p)
        assert polygon_centroid(t) == ORIGIN
        _, b, c = (P(1, p.alpha), P(-1, p.beta), P(0, -p.alpha - p.beta))
        assert (b + c) * F(1, 2) == P(F(-1, 2), -p.alpha / 2)
        assert gauge_factor(SQUARE, t, ORIGIN) >= F(5, 2)


def test_case2_family_2000():
    rng = random.Random(12)
    n = 0
    while n < 2000:
        p = rand_case2(rng)
        try:
            t = case2_triangle(p)
        except DegenerateError:
            continue
        n += 1
        assert polygon_centroid(t) == ORIGIN
        assert gauge_factor(SQUARE, t, ORIGIN) >= F(5, 2)


# -- certificates -----------------------------------------------------------------


def test_witness_check_passes_and_replays():
    cert = witness_check()
    assert cert.verdict
    assert [s["gauge"] for s in cert.steps] == ["5/2", "5/2"]
    assert replay(cert.to_json())


def test_witness_check_rejects_perturbed_apex():
    bent = Triangle.of((1, F(1, 2)), (-1, F(1, 2)), (0, F(-9, 10)))
    cert = witness_check([bent])
    assert not cert.verdict
    assert cert.steps[0]["centroid"] != ["0/1", "0/1"]


def test_case1_cover_records():
    cert = case1_cover()
    assert cert.verdict
    e = cert.step("point_e_formula")
    assert e["identity_holds"] and not e["printed_formula_matches"]
    cross = cert.step("threshold_crossing")
    assert cross["point"] == ["1/2", "1/2"] and cross["on_edge_beta_eq_1_minus_alpha"]
    sweep = cert.step("grid_sweep")
    assert sweep["failure_count"] == 0 and sweep["min_gauge"] == "5/2"


def test_case1_tampered_cover_fails():
    cert = case1_cover(tamper=True)
    assert not cert.verdict
    assert not cert.step("thresholds_match_geometry")["consistent"]


def test_case2_cover_records():
    cert = case2_cover()
    assert cert.verdict
    assert cert.step("triple_point")["values"] == ["-1/5"] * 3
    sweep = cert.step("grid_sweep")
    assert sweep["failure_count"] == 0 and sweep["min_gauge"] == "5/2"
    assert all(s["certificate"]["verdict"] == "pass" for s in cert.steps if s["check"] == "sign")


@pytest.mark.parametrize("case_id", [1, 2])
def test_alpha_zero(case_id):
    cert = subcase_alpha_zero(case_id)
    assert cert.verdict
    assert cert.step("minimiser")["gauge"] == "5/2"
    ratios = sorted(tuple(s["support_ratio"]) for s in cert.steps if s["check"] == "piece")
    assert ratios == [("2/1", "-1/1"), ("3/1", "1/1")]  # 2 - t and 3 + t


@pytest.mark.parametrize("t, g", [(F(-1, 2), F(5, 2)), (F(0), F(3)), (F(-1), F(3))])
def test_alpha_zero_gauges(t, g):
    assert gauge_factor(SQUARE, alpha_zero_triangle(1, t), ORIGIN) == g


def test_alpha_zero_bad_case():
    with pytest.raises(ValueError):
        subcase_alpha_zero(3)


# -- ledger -------------------------------------------------------------------------


def test_ledger_passes_and_replays(ledger):
    doc = json.loads(ledger.dumps())
    assert doc["theorem"] == "delta_cen(P,T)=5/2"
    assert [e["name"] for e in doc["entries"]] == list(ENTRY_NAMES)
    assert doc["verdict"] == "pass"
    assert replay_ledger(doc)


def test_ledger_corruption_located(ledger):
    doc = copy.deepcopy(ledger.to_json())
    doc["entries"][0]["certificate"]["steps"][1]["gauge"] = "2/1"
    res = replay_ledger(doc)
    assert not res
    assert "entries[0]" in res.location and res.location.endswith("steps[1].gauge")


def test_ledger_missing_entry(ledger):
    doc = copy.deepcopy(ledger.to_json())
    del doc["entries"][2]
    assert not replay_ledger(doc)


def test_tampered_ledger():
    bad = certify_theorem(tamper_case1=True)
    assert not bad.verdict
    assert bad.first_failure() == "case1_cover"
    assert not replay_ledger(bad.to_json())


def test_certificates_never_use_floats(ledger):
    def walk(node):
        if isinstance(node, float):
            raise AssertionError(f"float in certificate: {node}")
        if isinstance(node, dict):
            for v in node.values():
                walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)

    walk(ledger.to_json())


def test_weakened_threshold_region():
    """Emptiness query with (2 - a)/3 swapped for (2 - a)/2.

    The weaker threshold still leaves V minus both half-planes empty, so the
    query reports emptiness; only the ledger-level consistency checks catch
    the swap. Kept as a plain fact check; the acceptance suite holds the
    literal negative-control criterion.
    """
    V = [C.gt(1, 0, 0), C.le(1, 0, 1), C.ge(1, 1, 0), C.le(1, 1, 1)]
    cert = region_empty(V + [C.gt(F(1, 2), 1, 1), C.gt(3, 1, 2)])
    assert cert.verdict
