"""Numeric estimate of the centroid Banach-Mazur distance between convex polygons.

Both bodies are translated so their centroids sit at the origin; a candidate
is then a linear map L, and the best homothety ratio for E = L(D) is the
product ``gauge(C, E) * gauge(E, C)`` (the inner scale is fixed by shrinking E
until it fits in C). The search runs in float through :mod:`.kernels`; the
returned map is rational and its two gauges are recomputed exactly.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from . import kernels
from .geometry import (
    ORIGIN,
    SQUARE,
    AffineMap2,
    ConvexPolygon,
    GeometryError,
    Point2,
    Triangle,
    apply_affine,
    gauge_factor,
    polygon_centroid,
)
from .rational import fmt

__all__ = [
    "DistanceEstimate",
    "SearchConfig",
    "centered",
    "estimate_distance",
    "grid_oracle_square_triangle",
    "objective",
]

log = logging.getLogger(__name__)

# map entries are rationalised to this denominator before the exact recheck
_MAP_DENOMINATOR = 10**6
# cap on basin seeds across all branches, and pattern-search rounds spent on each
_MAX_SEEDS = 256
_POLISH_ROUNDS = 4


@dataclass(frozen=True)
class SearchConfig:
    coarse_grid_steps: int = 24
    refinement_rounds: int = 40
    shrink_factor: Fraction = Fraction(1, 2)
    tolerance: float = 1e-3
    starts: int = 12

    def __post_init__(self):
        if self.coarse_grid_steps < 1 or self.refinement_rounds < 1 or self.starts < 1:
            raise ValueError("grid steps, refinement rounds and starts must be >= 1")
        if not 0 < self.shrink_factor < 1:
            raise ValueError("shrink_factor must lie in (0, 1)")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")


@dataclass(frozen=True)
class DistanceEstimate:
    lambda_hat: float
    best_map: AffineMap2
    certificate_pair: tuple[Fraction, Fraction]
    evaluations: int = field(default=0, compare=False)

    @property
    def exact_lambda(self) -> Fraction:
        return self.certificate_pair[0] * self.certificate_pair[1]

    def to_json(self) -> dict:
        return {
            "lambda_hat": round(self.lambda_hat, 12),
            "lambda_exact": fmt(self.exact_lambda),
            "best_map": self.best_map.to_json(),
            "exact_gauges": [fmt(g) for g in self.certificate_pair],
            "kind": "upper bound (search minimum)",
        }


def centered(poly: ConvexPolygon) -> ConvexPolygon:
    g = polygon_centroid(poly)
    return apply_affine(AffineMap2(Fraction(1), Fraction(0), Fraction(0), Fraction(1), -g.x, -g.y), poly)


def objective(L: AffineMap2, C: ConvexPolygon, D: ConvexPolygon) -> Fraction:
    """Exact product of gauges for the linear part of *L* (translation ignored)."""
    lin = AffineMap2.linear(L.m11, L.m12, L.m21, L.m22)
    if lin.det == 0:
        raise GeometryError("singular linear map")
    c0 = centered(C)
    e = apply_affine(lin, centered(D))
    return gauge_factor(c0, e, ORIGIN) * gauge_factor(e, c0, ORIGIN)


def _as_array(poly: ConvexPolygon) -> np.ndarray:
    return np.array([[float(v.x), float(v.y)] for v in poly.vertices])


def _branch_maps(free: np.ndarray, slot: int, sign: float) -> np.ndarray:
    """Insert the fixed +-1 entry at *slot* into rows of three free entries."""
    out = np.empty((free.shape[0], 4))
    out[:, slot] = sign
    out[:, [i for i in range(4) if i != slot]] = free
    return out


_LATTICE = np.array([d for d in product((-1, 0, 1), repeat=3) if any(d)], dtype=float)
_LATTICE /= np.linalg.norm(_LATTICE, axis=1)[:, None]
_GOLDEN_ANGLE = np.pi * (3.0 - np.sqrt(5.0))


def _fibonacci_sphere(n: int, turn: float) -> np.ndarray:
    i = np.arange(n) + 0.5
    z = 1.0 - 2.0 * i / n
    r = np.sqrt(1.0 - z * z)
    phi = np.pi * (1.0 + np.sqrt(5.0)) * i + turn
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


def _poll_directions(round_no: int, n_sphere: int = 64) -> np.ndarray:
    # the fixed lattice alone stalls on the kinks of the max-type objective;
    # a sphere set turned by the golden angle each round breaks the ties
    return np.vstack([_LATTICE, _fibonacci_sphere(n_sphere, round_no * _GOLDEN_ANGLE)])


def _local_minima(grid: np.ndarray) -> np.ndarray:
    padded = np.pad(grid, 1, constant_values=np.inf)
    mask = np.isfinite(grid)
    n0, n1, n2 = grid.shape
    for d in product((-1, 0, 1), repeat=3):
        if any(d):
            nb = padded[1 + d[0] : 1 + d[0] + n0, 1 + d[1] : 1 + d[1] + n1, 1 + d[2] : 1 + d[2] + n2]
            mask &= grid <= nb
    return mask.ravel()


def _pattern_search(f, x0: np.ndarray, fx0: float, step: float, cfg: SearchConfig):
    x, fx = x0.copy(), fx0
    shrink = float(cfg.shrink_factor)
    evals = 0
    for round_no in range(cfg.refinement_rounds):
        dirs = _poll_directions(round_no)
        for _move in range(200):
            cand = x + step * dirs
            vals = f(cand)
            evals += len(cand)
            k = int(np.argmin(vals))
            if vals[k] < fx:
                x, fx = cand[k], float(vals[k])
            else:
                break
        step *= shrink
    return x, fx, evals


def estimate_distance(
    C: ConvexPolygon, D: ConvexPolygon, cfg: SearchConfig | None = None
) -> DistanceEstimate:
    """Search minimum of the product-of-gauges objective over linear maps.

    Scale is removed by pinning the largest-magnitude entry of the map to
    +1 or -1, giving eight branches of three free entries in [-1, 1]. A coarse
    grid over every branch seeds a deterministic pattern search from the
    ``cfg.starts`` best cells. The result is an upper bound on the distance.
    """
    cfg = cfg or SearchConfig()
    c0, d0 = centered(C), centered(D)
    c_arr, d_arr = _as_array(c0), _as_array(d0)

    def f(maps):
        return kernels.objective_batch(c_arr, d_arr, maps)

    axis = np.linspace(-1.0, 1.0, cfg.coarse_grid_steps) if cfg.coarse_grid_steps > 1 else np.zeros(1)
    free = np.array(list(product(axis, repeat=3)))
    pitch = 2.0 / max(cfg.coarse_grid_steps - 1, 1)

    seeds = []
    evals = 0
    n = len(axis)
    for slot in range(4):
        for sign in (1.0, -1.0):
            vals = f(_branch_maps(free, slot, sign))
            evals += len(vals)
            # seed from distinct basins: grid cells no worse than their neighbours
            cells = np.flatnonzero(_local_minima(vals.reshape(n, n, n)))
            cells = cells[np.isfinite(vals[cells])]
            order = cells[np.argsort(vals[cells], kind="stable")][:_MAX_SEEDS]
            seeds.extend((float(vals[i]), slot, sign, free[i]) for i in order)
    seeds.sort(key=lambda t: (t[0], t[1], -t[2]))
    seeds = seeds[:_MAX_SEEDS]

    def branch(slot, sign):
        return lambda x: f(_branch_maps(np.atleast_2d(x), slot, sign))

    # coarse values rank basins poorly, so every seed gets a short polish first
    quick = SearchConfig(refinement_rounds=_POLISH_ROUNDS, shrink_factor=cfg.shrink_factor)
    polished = []
    for _val, slot, sign, x0 in seeds:
        x, fx, k = _pattern_search(branch(slot, sign), x0, _val, pitch, quick)
        evals += k
        polished.append((fx, slot, sign, x))
    polished.sort(key=lambda t: (t[0], t[1], -t[2]))

    best = None
    for val, slot, sign, x0 in polished[: cfg.starts]:
        x, fx, k = _pattern_search(branch(slot, sign), x0, val, pitch * float(cfg.shrink_factor) ** _POLISH_ROUNDS, cfg)
        evals += k
        if best is None or fx < best[0]:
            best = (fx, _branch_maps(x[None, :], slot, sign)[0])
    if best is None:
        raise GeometryError("objective is infinite on the whole search grid")

    entries = [Fraction(float(v)).limit_denominator(_MAP_DENOMINATOR) for v in best[1]]
    lin = AffineMap2.linear(*entries)
    e = apply_affine(lin, d0)
    g_ce = gauge_factor(c0, e, ORIGIN)
    g_ec = gauge_factor(e, c0, ORIGIN)
    # full map: D -> scaled so that a(D) sits inside C with matching centroids
    s = 1 / g_ec
    gd, gc = polygon_centroid(D), polygon_centroid(C)
    a = AffineMap2(
        s * lin.m11,
        s * lin.m12,
        s * lin.m21,
        s * lin.m22,
        gc.x - s * (lin.m11 * gd.x + lin.m12 * gd.y),
        gc.y - s * (lin.m21 * gd.x + lin.m22 * gd.y),
    )
    log.debug("search best %.9f, exact %s, %d evaluations", best[0], g_ce * g_ec, evals)
    return DistanceEstimate(float(g_ce * g_ec), a, (g_ce, g_ec), evals)


def _grid_point(i: int, j: int, steps: int) -> Point2:
    return Point2(Fraction(2 * i - steps, steps), Fraction(2 * j - steps, steps))


def grid_oracle_square_triangle(steps: int, backend: str | None = None) -> tuple[Fraction, Triangle]:
    """Brute-force minimum of gauge(S, T, o) over centroid-o triangles on a grid.

    Vertices v1, v2 range over the grid of pitch 2/steps in the square S and
    v3 = -(v1 + v2) must also lie in S. Enumeration runs on exact integers
    in :mod:`.kernels`; the minimiser is re-verified with rational geometry.
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    num, den, i1, j1, i2, j2 = kernels.oracle_min_gauge(steps, backend)
    if num < 0:
        raise ValueError(f"no nondegenerate centroid triangle on the grid with steps={steps}")
    v1, v2 = _grid_point(i1, j1, steps), _grid_point(i2, j2, steps)
    tri = Triangle(v1, v2, -(v1 + v2))
    value = Fraction(num, den)
    exact = gauge_factor(SQUARE, tri, ORIGIN)
    if exact != value:
        raise ArithmeticError(f"kernel gauge {value} disagrees with exact recomputation {exact}")
    return value, tri
