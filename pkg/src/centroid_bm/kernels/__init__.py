"""Hot loops with two interchangeable backends.

``CENTROID_BM_BACKEND=numpy`` forces the pure-numpy path; the default is
numba when it imports. ``CENTROID_BM_THREADS`` caps numba's worker threads.
"""
from __future__ import annotations

import os

import numpy as np

from . import _numpy

__all__ = ["BACKEND", "backend", "objective_batch", "oracle_min_gauge"]


def _load_numba():
    # the system TBB is too old for numba; skip the layer instead of warning
    os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")
    try:
        from . import _numba
    except ImportError:
        return None
    threads = os.environ.get("CENTROID_BM_THREADS")
    if threads:
        import numba

        numba.set_num_threads(max(1, min(int(threads), numba.config.NUMBA_NUM_THREADS)))
    return _numba


_requested = os.environ.get("CENTROID_BM_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"CENTROID_BM_BACKEND must be 'numba' or 'numpy', got {_requested!r}")
_numba = _load_numba() if _requested == "numba" else None
BACKEND = "numba" if _numba is not None else "numpy"


def backend(name: str | None = None):
    """Kernel module for *name* (default: the active backend)."""
    name = name or BACKEND
    if name == "numpy":
        return _numpy
    if name == "numba":
        mod = _numba or _load_numba()
        if mod is None:
            raise RuntimeError("numba backend requested but numba is not importable")
        return mod
    raise ValueError(f"unknown backend {name!r}")


def oracle_min_gauge(steps: int, backend_name: str | None = None) -> tuple[int, int, int, int, int, int]:
    """Exact minimum gauge of the square over the centroid-o grid triangles.

    Grid coordinates are ``(2*i - steps) / steps``; returns
    ``(num, den, i1, j1, i2, j2)`` for the first minimiser in row-major order,
    or ``num == -1`` when no nondegenerate triangle exists.
    """
    out = backend(backend_name).oracle_min_gauge(int(steps))
    return tuple(int(v) for v in out)


def objective_batch(c_pts, d_pts, maps, backend_name: str | None = None) -> np.ndarray:
    """Float product-of-gauges objective for a batch of 2x2 maps (rows m11, m12, m21, m22).

    Both point sets must be centred on their centroids and listed counterclockwise.
    """
    c_pts = np.ascontiguousarray(c_pts, dtype=np.float64)
    d_pts = np.ascontiguousarray(d_pts, dtype=np.float64)
    maps = np.ascontiguousarray(maps, dtype=np.float64).reshape(-1, 4)
    return backend(backend_name).objective_batch(c_pts, d_pts, maps)
