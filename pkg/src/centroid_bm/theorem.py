"""Machine-checked case analysis: the centroid distance of square and triangle is 5/2.

Coordinates follow the usual normalisation: the square S = [-1, 1]^2 centred
at the origin o, a centroid-o triangle abc inside S with vertex a = (1, alpha)
on the right side. Case 1 puts b = (-1, beta) on the left side, Case 2 puts
c = (gamma, -1) on the bottom side, and the alpha = 0 families are handled
separately. In every case some side line of (5/2)abc is shown to meet S,
so the open triangle (5/2)abc cannot contain S.

Each public ``*_cover``/``*_check`` function returns a replayable
:class:`~centroid_bm.certificate.Certificate`. Algebraic facts are certified
with Sturm sign certificates and exact region emptiness; a rational grid sweep
re-checks the geometry directly so transcription errors in the algebra are
caught too.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .certificate import Certificate, ReplayResult, build, certificate_kind, replay
from .exact import Interval, Polynomial, certify_sign_on_interval
from .geometry import (
    ORIGIN,
    SQUARE,
    DegenerateError,
    Line2,
    Point2,
    Triangle,
    contains_polygon,
    edge_supports,
    gauge_factor,
    line_intersection,
    polygon_centroid,
)
from .rational import fmt, parse
from .regions import LinearConstraint2, region_empty

__all__ = [
    "Case1Params",
    "Case2Params",
    "DELTA0",
    "ENTRY_NAMES",
    "ProofLedger",
    "RATIO",
    "SECOND_EXTREMAL",
    "THEOREM",
    "case1_cover",
    "case1_scaled_lines",
    "case1_triangle",
    "case2_cover",
    "case2_scaled_lines",
    "case2_thresholds",
    "case2_triangle",
    "certify_theorem",
    "replay_ledger",
    "subcase_alpha_zero",
    "witness_check",
]

THEOREM = "delta_cen(P,T)=5/2"
RATIO = Fraction(5, 2)
F = Fraction

DELTA0 = Triangle(Point2(F(1), F(1, 2)), Point2(F(-1), F(1, 2)), Point2(F(0), F(-1)))
SECOND_EXTREMAL = Triangle(Point2(F(1), F(1, 5)), Point2(F(-4, 5), F(4, 5)), Point2(F(-1, 5), F(-1)))

ENTRY_NAMES = ("witness", "case1_cover", "case2_cover", "subcase_1_2", "subcase_2_2")

DEFAULT_GRID_STEP = F(1, 64)

# sides of S, as used by the covering arguments
BOTTOM = (Point2(F(-1), F(-1)), Point2(F(1), F(-1)))
LEFT = (Point2(F(-1), F(-1)), Point2(F(-1), F(1)))
RIGHT = (Point2(F(1), F(-1)), Point2(F(1), F(1)))

_alpha = Polynomial.x()


def _pt(p: Point2) -> list[str]:
    return p.to_json()


def _scaled(p: Point2) -> Point2:
    return p * RATIO


# -- parameter families --------------------------------------------------------


@dataclass(frozen=True)
class Case1Params:
    """a = (1, alpha), b = (-1, beta) with 0 < alpha <= 1, -alpha <= beta <= 1 - alpha."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        a, b = F(self.alpha), F(self.beta)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        if not (0 < a <= 1 and -a <= b <= 1 - a):
            raise ValueError(f"(alpha, beta) = ({a}, {b}) is outside region V")


@dataclass(frozen=True)
class Case2Params:
    """a = (1, alpha), c = (gamma, -1) with 0 < alpha <= 1, -1 <= gamma <= 0."""

    alpha: Fraction
    gamma: Fraction

    def __post_init__(self):
        a, g = F(self.alpha), F(self.gamma)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "gamma", g)
        if not (0 < a <= 1 and -1 <= g <= 0):
            raise ValueError(f"(alpha, gamma) = ({a}, {g}) is outside region W")


def case1_triangle(p: Case1Params) -> Triangle:
    if p.beta == -p.alpha:
        raise DegenerateError("degenerate triangle: beta = -alpha")
    return Triangle(Point2(F(1), p.alpha), Point2(F(-1), p.beta), Point2(F(0), -p.alpha - p.beta))


def case2_triangle(p: Case2Params) -> Triangle:
    a = Point2(F(1), p.alpha)
    b = Point2(-1 - p.gamma, 1 - p.alpha)
    c = Point2(p.gamma, F(-1))
    return Triangle(a, b, c)


def case1_scaled_lines(p: Case1Params) -> tuple[Line2, Line2]:
    """Lines through sides a'c' and b'c' of (5/2)abc, built from the scaled vertices."""
    a, b, c = (Point2(F(1), p.alpha), Point2(F(-1), p.beta), Point2(F(0), -p.alpha - p.beta))
    a2, b2, c2 = _scaled(a), _scaled(b), _scaled(c)
    return Line2.through(a2, c2), Line2.through(b2, c2)


def _case1_printed_lines(p: Case1Params) -> tuple[Line2, Line2]:
    al, be = p.alpha, p.beta
    # y - 5a/2 = (2a + b)(x - 5/2)  and  y + 5a/2 + 5b/2 = (-a - 2b) x
    ac = Line2(2 * al + be, F(-1), (2 * al + be) * RATIO - RATIO * al)
    bc = Line2(al + 2 * be, F(1), -RATIO * al - RATIO * be)
    return ac, bc


def case2_scaled_lines(p: Case2Params) -> tuple[Line2, Line2, Line2]:
    """Lines through sides a'b', b'c', a'c' of (5/2)abc."""
    a, b, c = case2_triangle_vertices(p)
    a2, b2, c2 = _scaled(a), _scaled(b), _scaled(c)
    return Line2.through(a2, b2), Line2.through(b2, c2), Line2.through(a2, c2)


def case2_triangle_vertices(p: Case2Params) -> tuple[Point2, Point2, Point2]:
    return Point2(F(1), p.alpha), Point2(-1 - p.gamma, 1 - p.alpha), Point2(p.gamma, F(-1))


def _case2_printed_lines(p: Case2Params) -> list[Line2 | None]:
    al, ga = p.alpha, p.gamma

    def point_slope(x0, y0, num, den):
        # y - y0 = (num/den)(x - x0)  ->  num x - den y = num x0 - den y0
        if den == 0:
            return None
        return Line2(num, -den, num * x0 - den * y0)

    return [
        point_slope(RATIO, RATIO * al, -1 + 2 * al, 2 + ga),
        point_slope(RATIO * ga, -RATIO, 2 - al, -1 - 2 * ga),
        point_slope(RATIO, RATIO * al, al + 1, 1 - ga),
    ]


# thresholds as (numerator, denominator) polynomials in alpha
_G_AB = (1 - 4 * _alpha, -2 + 5 * _alpha)
_G_BC = (1 - 2 * _alpha, -4 + 5 * _alpha)
_G_AC = (-1 + 2 * _alpha, 2 + 5 * _alpha)


def case2_thresholds(alpha) -> tuple[Fraction, Fraction, Fraction]:
    """Curve values g_ab, g_bc, g_ac bounding the Case 2 covering subregions."""
    alpha = F(alpha)
    out = []
    for num, den in (_G_AB, _G_BC, _G_AC):
        d = den(alpha)
        if d == 0:
            raise ZeroDivisionError(f"threshold undefined at alpha = {alpha}")
        out.append(num(alpha) / d)
    return tuple(out)


# -- witness ------------------------------------------------------------------


@certificate_kind("witness")
def _witness_builder(inputs: dict) -> tuple[list, bool]:
    ratio = parse(inputs["ratio"])
    steps, ok = [], True
    for verts in inputs["triangles"]:
        tri = Triangle(*(Point2.from_json(v) for v in verts))
        inside = contains_polygon(SQUARE, tri, "closed")
        cen = polygon_centroid(tri)
        sup = edge_supports(SQUARE, tri, ORIGIN)
        g = max(sup)
        steps.append(
            {
                "check": "witness_triangle",
                "vertices": [_pt(v) for v in tri.vertices],
                "inside_square": inside,
                "centroid": _pt(cen),
                "edge_supports": [fmt(s) for s in sup],
                "gauge": fmt(g),
            }
        )
        ok &= inside and cen == ORIGIN and g == ratio
    return steps, ok


def witness_check(triangles: list[Triangle] | None = None) -> Certificate:
    """Certify that each triangle lies in S, has centroid o and gauge exactly 5/2.

    Defaults to the two extremal triangles.
    """
    triangles = triangles if triangles is not None else [DELTA0, SECOND_EXTREMAL]
    return build(
        "witness",
        {"ratio": fmt(RATIO), "triangles": [[_pt(v) for v in t.vertices] for t in triangles]},
    )


# -- Case 1 --------------------------------------------------------------------


def _rational_grid(lo: Fraction, hi: Fraction, step: Fraction) -> Iterator[Fraction]:
    k = -((-lo) // step)  # ceil(lo / step)
    while k * step <= hi:
        yield k * step
        k += 1


def _identity_on_grid(fn: Callable[[Fraction, Fraction], Fraction], xs, ys) -> bool:
    return all(fn(x, y) == 0 for x in xs for y in ys)


# five distinct values per variable: enough to pin polynomials of degree <= 4
_ID_ALPHAS = [F(1, 6), F(1, 3), F(1, 2), F(2, 3), F(5, 6)]
_ID_BETAS = [F(0), F(1, 12), F(1, 8), F(1, 6), F(1, 7)]
_ID_GAMMAS = [F(-5, 6), F(-2, 3), F(-1, 2), F(-1, 3), F(-1, 6)]


def _case1_region() -> list[LinearConstraint2]:
    C = LinearConstraint2
    return [C.gt(1, 0, 0), C.le(1, 0, 1), C.ge(1, 1, 0), C.le(1, 1, 1)]


def _above(c0: Fraction, c1: Fraction) -> LinearConstraint2:
    """beta > c0 + c1*alpha in the (alpha, beta) plane."""
    return LinearConstraint2.gt(-c1, 1, c0)


# Sweeps run on integers: with alpha = i/N etc. every vertex times N is an
# integer point, and gauge / line tests compare cross-multiplied integers.

_SQUARE_CORNERS = ((1, 1), (-1, 1), (-1, -1), (1, -1))


def _int_gauge_at_least(verts, n: int, ratio: Fraction) -> tuple[bool, Fraction]:
    """gauge(S, T, o) for T = verts / n (counterclockwise integer points)."""
    best = None
    for k in range(3):
        (px, py), (qx, qy) = verts[k], verts[(k + 1) % 3]
        nx, ny = qy - py, px - qx
        h = nx * px + ny * py
        g = Fraction(n * (abs(nx) + abs(ny)), h)
        best = g if best is None else max(best, g)
    return best >= ratio, best


def _int_line_meets(p, q, pts) -> bool:
    """Line through integer points p, q meets the hull of *pts* (closed)."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    vals = [dx * (y - p[1]) - dy * (x - p[0]) for x, y in pts]
    return min(vals) <= 0 <= max(vals)


def _grid_ints(step: Fraction) -> int:
    n = 1 / step
    if n.denominator != 1:
        raise ValueError("grid step must be 1/N")
    return n.numerator


def _case1_sweep(step: Fraction) -> dict:
    n = _grid_ints(step)
    points = skipped = by_ac = by_bc = 0
    failures: list[list[str]] = []
    min_gauge = None
    bottom = [(-n, -n), (n, -n)]
    left = [(-n, -n), (-n, n)]
    for i in range(1, n + 1):
        for j in range(-i, n - i + 1):
            if j == -i:
                skipped += 1
                continue
            points += 1
            a, b, c = (n, i), (-n, j), (0, -i - j)
            # (5/2) times the vertices, doubled so the square becomes [-2n, 2n]^2
            a2, b2, c2 = ((5 * x, 5 * y) for x, y in (a, b, c))
            hit_ac = _int_line_meets(a2, c2, [(2 * x, 2 * y) for x, y in bottom])
            hit_bc = _int_line_meets(b2, c2, [(2 * x, 2 * y) for x, y in left])
            by_ac += hit_ac
            by_bc += hit_bc
            big, g = _int_gauge_at_least((a, b, c), n, RATIO)
            min_gauge = g if min_gauge is None else min(min_gauge, g)
            if not (hit_ac or hit_bc) or not big:
                failures.append([fmt(F(i, n)), fmt(F(j, n))])
    return {
        "check": "grid_sweep",
        "step": fmt(step),
        "points": points,
        "degenerate_skipped": skipped,
        "covered_by_ac": by_ac,
        "covered_by_bc": by_bc,
        "min_gauge": fmt(min_gauge),
        "failures": failures[:10],
        "failure_count": len(failures),
    }


@certificate_kind("case1_cover")
def _case1_builder(inputs: dict) -> tuple[list, bool]:
    t_ac = [parse(v) for v in inputs["threshold_ac"]]  # beta <= t0 + t1*alpha
    t_bc = [parse(v) for v in inputs["threshold_bc"]]
    step = parse(inputs["grid_step"])
    steps: list[dict] = []
    ok = True

    # where l_a'c' meets y = -1: x = (5a + 5b - 2) / (4a + 2b); the denominator
    # is positive on V, so x <= 1 iff a + 3b <= 2 and x >= -1 iff 9a + 7b >= 2
    num = lambda a, b: 5 * a + 5 * b - 2  # noqa: E731
    den = lambda a, b: 4 * a + 2 * b  # noqa: E731
    printed = lambda a, b: 2 - 5 * a + 5 * b  # noqa: E731

    def e_x(a, b):
        return line_intersection(case1_scaled_lines(Case1Params(a, b))[0], Line2.horizontal(-1)).x

    id_e = _identity_on_grid(lambda a, b: e_x(a, b) * den(a, b) - num(a, b), _ID_ALPHAS, _ID_BETAS)
    printed_e = _identity_on_grid(lambda a, b: e_x(a, b) * den(a, b) - printed(a, b), _ID_ALPHAS, _ID_BETAS)
    steps.append(
        {
            "check": "point_e_formula",
            "formula": "x = (5a + 5b - 2)/(4a + 2b)",
            "identity_holds": id_e,
            "printed_formula_matches": printed_e,
        }
    )
    ok &= id_e

    def f_y(a, b):
        return line_intersection(case1_scaled_lines(Case1Params(a, b))[1], Line2.vertical(-1)).y

    id_f = _identity_on_grid(lambda a, b: f_y(a, b) - (-F(3, 2) * a - F(1, 2) * b), _ID_ALPHAS, _ID_BETAS)
    steps.append({"check": "point_f_formula", "formula": "y = -(3/2)a - (1/2)b", "identity_holds": id_f})
    ok &= id_f

    lines_agree = all(
        case1_scaled_lines(Case1Params(a, b)) == _case1_printed_lines(Case1Params(a, b))
        for a in _ID_ALPHAS
        for b in _ID_BETAS
    )
    steps.append({"check": "printed_line_equations", "agree": lines_agree})
    ok &= lines_agree

    # the input thresholds must be the ones the geometry produces
    derived = {"ac": [F(2, 3), F(-1, 3)], "bc": [F(2), F(-3)]}
    consistent = t_ac == derived["ac"] and t_bc == derived["bc"]
    steps.append(
        {
            "check": "thresholds_match_geometry",
            "derived_ac": [fmt(v) for v in derived["ac"]],
            "derived_bc": [fmt(v) for v in derived["bc"]],
            "consistent": consistent,
        }
    )
    ok &= consistent

    V = _case1_region()
    C = LinearConstraint2
    queries = {
        # main claim: nothing in V lies above both threshold lines
        "V_minus_both_thresholds": V + [_above(*t_ac), _above(*t_bc)],
        # e to the left of the square while f above it
        "e_left_and_f_high": V + [C.lt(9, 7, 2), _above(*t_bc)],
        "e_right_and_f_above_top": V + [_above(*t_ac), C.lt(3, 1, -2)],
        "e_left_and_f_above_top": V + [C.lt(9, 7, 2), C.lt(3, 1, -2)],
        "e_denominator_nonpositive": V + [C.le(4, 2, 0)],
    }
    for name, cons in queries.items():
        cert = region_empty(cons)
        steps.append({"check": "region_empty", "query": name, "certificate": cert.to_json()})
        ok &= cert.verdict

    # the two threshold lines cross at (1/2, 1/2), on the edge beta = 1 - alpha of V
    cross = line_intersection(Line2(-t_ac[1], F(1), t_ac[0]), Line2(-t_bc[1], F(1), t_bc[0]))
    on_edge = cross is not None and cross.x + cross.y == 1
    steps.append(
        {
            "check": "threshold_crossing",
            "point": _pt(cross) if cross else None,
            "on_edge_beta_eq_1_minus_alpha": on_edge,
            "is_half_half": cross == Point2(F(1, 2), F(1, 2)),
        }
    )
    ok &= on_edge

    sweep = _case1_sweep(step)
    steps.append(sweep)
    ok &= sweep["failure_count"] == 0
    return steps, ok


def case1_cover(grid_step: Fraction = DEFAULT_GRID_STEP, *, tamper: bool = False) -> Certificate:
    """Certify V is covered by the regions where l_a'c' or l_b'c' meets S.

    *tamper* swaps the threshold (2 - alpha)/3 for the weaker (2 - alpha)/2;
    the resulting certificate must fail (negative control).
    """
    t_ac = [F(1), F(-1, 2)] if tamper else [F(2, 3), F(-1, 3)]
    return build(
        "case1_cover",
        {
            "threshold_ac": [fmt(v) for v in t_ac],
            "threshold_bc": [fmt(F(2)), fmt(F(-3))],
            "grid_step": fmt(F(grid_step)),
        },
    )


# -- Case 2 --------------------------------------------------------------------

# Each side line of (5/2)abc crosses its side-line of S at a coordinate u(alpha, gamma).
# u - bound equals (P0(alpha) + gamma*P1(alpha)) / q(alpha, gamma) with q > 0 on W.
# Entries: name, which line, which side, coordinate getter, bound, (P0, P1), q.
_X = Polynomial.x()


def _case2_side_forms():
    def k_y(p):
        return line_intersection(case2_scaled_lines(p)[0], Line2.vertical(1)).y

    def l_x(p):
        return line_intersection(case2_scaled_lines(p)[1], Line2.horizontal(-1)).x

    def m_x(p):
        return line_intersection(case2_scaled_lines(p)[2], Line2.horizontal(-1)).x

    return [
        ("k_le_1", k_y, F(1), (4 * _X - 1, 5 * _X - 2), lambda a, g: 2 * (2 + g)),
        ("k_ge_-1", k_y, F(-1), (4 * _X + 7, 5 * _X + 2), lambda a, g: 2 * (2 + g)),
        ("l_ge_-1", l_x, F(-1), (1 - 2 * _X, 4 - 5 * _X), lambda a, g: 4 - 2 * a),
        ("l_le_1", l_x, F(1), (4 * _X - 14, 8 - 10 * _X), lambda a, g: 2 * (4 - 2 * a)),
        ("m_le_1", m_x, F(1), (1 - 2 * _X, 2 + 5 * _X), lambda a, g: 2 + 2 * a),
        ("m_ge_-1", m_x, F(-1), (5 + 2 * _X, 2 + 5 * _X), lambda a, g: 2 + 2 * a),
    ]


def _sign(p: Polynomial, lo, hi, required: str, lo_open=False, hi_open=False) -> Certificate:
    return certify_sign_on_interval(p, Interval(F(lo), F(hi), lo_open, hi_open), required)


def _case2_sweep(step: Fraction) -> dict:
    n = _grid_ints(step)
    points = skipped = 0
    hits = [0, 0, 0]
    failures: list[list[str]] = []
    min_gauge = None
    corners = [(2 * n * x, 2 * n * y) for x, y in _SQUARE_CORNERS]
    for i in range(1, n + 1):
        for j in range(0, n + 1):
            a, b, c = (n, i), (-n + j, n - i), (-j, -n)
            if (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) == 0:
                skipped += 1
                continue
            points += 1
            a2, b2, c2 = ((5 * x, 5 * y) for x, y in (a, b, c))
            met = [_int_line_meets(p, q, corners) for p, q in ((a2, b2), (b2, c2), (a2, c2))]
            for k, m in enumerate(met):
                hits[k] += m
            big, g = _int_gauge_at_least((a, b, c), n, RATIO)
            min_gauge = g if min_gauge is None else min(min_gauge, g)
            if not any(met) or not big:
                failures.append([fmt(F(i, n)), fmt(F(-j, n))])
    return {
        "check": "grid_sweep",
        "step": fmt(step),
        "points": points,
        "degenerate_skipped": skipped,
        "covered_by_ab": hits[0],
        "covered_by_bc": hits[1],
        "covered_by_ac": hits[2],
        "min_gauge": fmt(min_gauge),
        "failures": failures[:10],
        "failure_count": len(failures),
    }


def _sub(num_den_1, num_den_2) -> tuple[Polynomial, Polynomial]:
    (n1, d1), (n2, d2) = num_den_1, num_den_2
    return n1 * d2 - n2 * d1, d1 * d2


@certificate_kind("case2_cover")
def _case2_builder(inputs: dict) -> tuple[list, bool]:
    step = parse(inputs["grid_step"])
    steps: list[dict] = []
    ok = True

    def record(name: str, cert: Certificate) -> None:
        nonlocal ok
        steps.append({"check": "sign", "claim": name, "certificate": cert.to_json()})
        ok &= cert.verdict

    # 1. each side-crossing condition is a form linear in gamma
    for name, coord, bound, (p0, p1), q in _case2_side_forms():
        holds = _identity_on_grid(
            lambda a, g: (coord(Case2Params(a, g)) - bound) * q(a, g) - (p0(a) + g * p1(a)),
            _ID_ALPHAS,
            _ID_GAMMAS,
        )
        steps.append(
            {
                "check": "crossing_form",
                "condition": name,
                "p0": p0.to_json(),
                "p1": p1.to_json(),
                "identity_holds": holds,
            }
        )
        ok &= holds
    q_positive = all(
        q(a, g) > 0 for _, _, _, _, q in _case2_side_forms() for a in (F(0), F(1)) for g in (F(-1), F(0))
    )
    # every q is affine in one variable, so positivity at the box corners is enough
    steps.append({"check": "denominators_positive_on_box", "holds": q_positive})
    ok &= q_positive

    # 2. the conditions that hold on all of W (forms linear in gamma: check gamma = -1, 0)
    always = {"k_ge_-1": ">=0", "l_le_1": "<=0", "m_ge_-1": ">=0"}
    for name, _, _, (p0, p1), _ in _case2_side_forms():
        if name in always:
            for g in (-1, 0):
                record(f"{name} at gamma={g}", _sign(p0 + g * p1, 0, 1, always[name]))

    # 3. the three covering curves and their domination pattern
    record("g_ab coefficient 5a-2 < 0 on (0,1/5]", _sign(5 * _X - 2, 0, F(1, 5), "<0", lo_open=True))
    record("g_bc coefficient 4-5a > 0 on [1/5,1/2]", _sign(4 - 5 * _X, F(1, 5), F(1, 2), ">0"))
    record("g_ac coefficient 2+5a > 0 on (0,1]", _sign(2 + 5 * _X, 0, 1, ">0", lo_open=True))

    num_i, den_i = _sub(_G_AC, _G_AB)
    matches_i = num_i == 6 * _X * (5 * _X - 1)
    steps.append({"check": "cleared_numerator", "claim": "g_ac - g_ab", "poly": num_i.to_json(), "factored_6a(5a-1)": matches_i})
    record("(g_ac - g_ab) numerator <= 0 on (0,1/5]", _sign(num_i, 0, F(1, 5), "<=0", lo_open=True))
    record("(g_ac - g_ab) denominator < 0 on (0,1/5]", _sign(den_i, 0, F(1, 5), "<0", lo_open=True))

    num_ii, den_ii = _sub(_G_AC, _G_BC)
    matches_ii = num_ii == 2 * (5 * _X - 1) * (2 * _X - 1)
    steps.append({"check": "cleared_numerator", "claim": "g_ac - g_bc", "poly": num_ii.to_json(), "factored_2(5a-1)(2a-1)": matches_ii})
    record("(g_ac - g_bc) numerator <= 0 on [1/5,1/2]", _sign(num_ii, F(1, 5), F(1, 2), "<=0"))
    record("(g_ac - g_bc) denominator < 0 on [1/5,1/2]", _sign(den_ii, F(1, 5), F(1, 2), "<0"))

    record("g_ac numerator >= 0 on [1/2,1]", _sign(_G_AC[0], F(1, 2), 1, ">=0"))
    record("g_ac denominator > 0 on [1/2,1]", _sign(_G_AC[1], F(1, 2), 1, ">0"))

    triple = case2_thresholds(F(1, 5))
    triple_ok = triple == (F(-1, 5),) * 3
    steps.append({"check": "triple_point", "alpha": fmt(F(1, 5)), "values": [fmt(v) for v in triple], "all_equal_-1/5": triple_ok})
    ok &= triple_ok and matches_i and matches_ii

    sweep = _case2_sweep(step)
    steps.append(sweep)
    ok &= sweep["failure_count"] == 0
    return steps, ok


def case2_cover(grid_step: Fraction = DEFAULT_GRID_STEP) -> Certificate:
    """Certify W is covered by the regions where l_a'b', l_b'c' or l_a'c' meets S.

    On (0, 1/5] the curve g_ac dominates g_ab, on [1/5, 1/2] it dominates
    g_bc, and on [1/2, 1] g_ac >= 0 covers every gamma <= 0 by itself.
    """
    return build("case2_cover", {"grid_step": fmt(F(grid_step))})


# -- alpha = 0 -----------------------------------------------------------------


def _alpha_zero_family(case_id: int, t: Fraction) -> Triangle:
    if case_id == 1:
        # b on the top side, c its mirror through d = (-1/2, 0)
        return Triangle(Point2(F(1), F(0)), Point2(t, F(1)), Point2(-1 - t, F(-1)))
    return Triangle(Point2(F(1), F(0)), Point2(-1 - t, F(1)), Point2(t, F(-1)))


def _alpha_zero_poly_vertices(case_id: int) -> list[tuple[Polynomial, Polynomial]]:
    t = Polynomial.x()
    one, zero = Polynomial.const(1), Polynomial()
    if case_id == 1:
        return [(one, zero), (t, one), (-1 - t, -one)]
    return [(one, zero), (-1 - t, one), (t, -one)]


@certificate_kind("alpha_zero")
def _alpha_zero_builder(inputs: dict) -> tuple[list, bool]:
    case_id = int(inputs["case_id"])
    if case_id not in (1, 2):
        raise ValueError("case_id must be 1 or 2")
    split = parse(inputs["split"])
    lo, hi = parse(inputs["t_range"][0]), parse(inputs["t_range"][1])
    verts = _alpha_zero_poly_vertices(case_id)
    corners = [(F(sx), F(sy)) for sx, sy in ((1, 1), (-1, 1), (-1, -1), (1, -1))]
    steps: list[dict] = []
    ok = True
    for piece in ((lo, split), (split, hi)):
        found = None
        for e in range(3):
            (px, py), (qx, qy) = verts[e], verts[(e + 1) % 3]
            nx, ny = qy - py, px - qx
            h = nx * px + ny * py
            for cx, cy in corners:
                support = nx * cx + ny * cy
                h_pos = _sign(h, *piece, ">0")
                bound = _sign(support - RATIO * h, *piece, ">=0")
                if h_pos.verdict and bound.verdict:
                    found = (e, (cx, cy), h, support, h_pos, bound)
                    break
            if found:
                break
        if found is None:
            steps.append({"check": "piece", "interval": [fmt(piece[0]), fmt(piece[1])], "certified": False})
            ok = False
            continue
        e, (cx, cy), h, support, h_pos, bound = found
        q, r = divmod(support, h)
        steps.append(
            {
                "check": "piece",
                "interval": [fmt(piece[0]), fmt(piece[1])],
                "edge": e,
                "square_vertex": [fmt(cx), fmt(cy)],
                "edge_offset": h.to_json(),
                "support": support.to_json(),
                "support_ratio": q.to_json() if r.is_zero() else None,
                "offset_positive": h_pos.to_json(),
                "ratio_at_least_5/2": bound.to_json(),
                "certified": True,
            }
        )
    witness_t = split
    tri = _alpha_zero_family(case_id, witness_t)
    g = gauge_factor(SQUARE, tri, ORIGIN)
    steps.append(
        {
            "check": "minimiser",
            "t": fmt(witness_t),
            "triangle": [_pt(v) for v in tri.vertices],
            "centroid": _pt(polygon_centroid(tri)),
            "gauge": fmt(g),
        }
    )
    ok &= g == RATIO and polygon_centroid(tri) == ORIGIN
    return steps, ok


def subcase_alpha_zero(case_id: int) -> Certificate:
    """Certify gauge >= 5/2 for the alpha = 0 family of Case 1 or Case 2.

    With a = (1, 0) the midpoint of bc is d = (-1/2, 0); Case 1 puts
    b = (t, 1), Case 2 puts c = (t, -1), t in [-1, 0]. The parameter range is
    split at t = -1/2, where the gauge is exactly 5/2.
    """
    if case_id not in (1, 2):
        raise ValueError("case_id must be 1 or 2")
    return build(
        "alpha_zero",
        {"case_id": case_id, "t_range": [fmt(F(-1)), fmt(F(0))], "split": fmt(F(-1, 2))},
    )


def alpha_zero_triangle(case_id: int, t) -> Triangle:
    return _alpha_zero_family(case_id, F(t))


# -- the ledger ---------------------------------------------------------------


@dataclass
class ProofLedger:
    entries: list[tuple[str, Certificate]] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return bool(self.entries) and all(c.verdict for _, c in self.entries)

    def first_failure(self) -> str | None:
        for name, cert in self.entries:
            if not cert.verdict:
                return name
        return None

    def to_json(self) -> dict:
        return {
            "theorem": THEOREM,
            "entries": [
                {"name": n, "certificate": c.to_json(), "verdict": "pass" if c.verdict else "fail"}
                for n, c in self.entries
            ],
            "verdict": "pass" if self.verdict else "fail",
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def certify_theorem(grid_step: Fraction = DEFAULT_GRID_STEP, *, tamper_case1: bool = False) -> ProofLedger:
    ledger = ProofLedger()
    ledger.entries.append(("witness", witness_check()))
    ledger.entries.append(("case1_cover", case1_cover(grid_step, tamper=tamper_case1)))
    ledger.entries.append(("case2_cover", case2_cover(grid_step)))
    ledger.entries.append(("subcase_1_2", subcase_alpha_zero(1)))
    ledger.entries.append(("subcase_2_2", subcase_alpha_zero(2)))
    return ledger


def replay_ledger(doc: dict) -> ReplayResult:
    """Re-verify a serialized proof ledger entry by entry."""
    if not isinstance(doc, dict):
        return ReplayResult(False, "ledger", "ledger must be a JSON object")
    if doc.get("theorem") != THEOREM:
        return ReplayResult(False, "ledger.theorem", f"expected {THEOREM!r}")
    entries = doc.get("entries")
    if not isinstance(entries, list):
        return ReplayResult(False, "ledger.entries", "missing entry list")
    names = [e.get("name") if isinstance(e, dict) else None for e in entries]
    if names != list(ENTRY_NAMES):
        return ReplayResult(False, "ledger.entries", f"expected entries {list(ENTRY_NAMES)}, got {names}")
    for i, entry in enumerate(entries):
        where = f"ledger.entries[{i}]({entry['name']})"
        res = replay(entry.get("certificate"), path=f"{where}.certificate")
        if not res:
            return res
        if entry.get("verdict") != "pass":
            return ReplayResult(False, f"{where}.verdict", "entry verdict is not pass")
    if doc.get("verdict") != "pass":
        return ReplayResult(False, "ledger.verdict", "ledger verdict is not pass")
    return ReplayResult(True)
