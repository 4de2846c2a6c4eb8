"""numba kernels. Same contracts as the numpy versions in ``_numpy``."""
import numpy as np
from numba import njit, prange


@njit(cache=True)
def _triangle_gauge(x1, y1, x2, y2, x3, y3, s):
    # exact gauge of the square [-s, s]^2 in triangle (x1,y1)(x2,y2)(x3,y3) about o,
    # returned as (num, den) with den > 0
    best_n = 0
    best_d = 1
    xs = (x1, x2, x3)
    ys = (y1, y2, y3)
    for e in range(3):
        px, py = xs[e], ys[e]
        qx, qy = xs[(e + 1) % 3], ys[(e + 1) % 3]
        nx = qy - py
        ny = px - qx
        h = nx * px + ny * py
        if h < 0:
            nx, ny, h = -nx, -ny, -h
        # support of the square in direction n
        sup = (abs(nx) + abs(ny)) * s
        if sup * best_d > best_n * h:
            best_n = sup
            best_d = h
    return best_n, best_d


@njit(cache=True, parallel=True)
def oracle_min_gauge(steps):
    m = steps + 1
    s = steps
    row_n = np.zeros(m * m, dtype=np.int64)
    row_d = np.zeros(m * m, dtype=np.int64)
    row_w = np.full((m * m, 4), -1, dtype=np.int64)
    for r in prange(m * m):
        i1 = r // m
        j1 = r % m
        x1 = 2 * i1 - s
        y1 = 2 * j1 - s
        bn = -1
        bd = 1
        for i2 in range(m):
            x2 = 2 * i2 - s
            x3 = -x1 - x2
            if x3 < -s or x3 > s:
                continue
            for j2 in range(m):
                y2 = 2 * j2 - s
                y3 = -y1 - y2
                if y3 < -s or y3 > s:
                    continue
                if (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1) == 0:
                    continue
                gn, gd = _triangle_gauge(x1, y1, x2, y2, x3, y3, s)
                if bn < 0 or gn * bd < bn * gd:
                    bn = gn
                    bd = gd
                    row_w[r, 0] = i1
                    row_w[r, 1] = j1
                    row_w[r, 2] = i2
                    row_w[r, 3] = j2
        row_n[r] = bn
        row_d[r] = bd
    # ordered reduction: result does not depend on thread scheduling
    best = -1
    for r in range(m * m):
        if row_n[r] < 0:
            continue
        if best < 0 or row_n[r] * row_d[best] < row_n[best] * row_d[r]:
            best = r
    if best < 0:
        return -1, 1, -1, -1, -1, -1
    return row_n[best], row_d[best], row_w[best, 0], row_w[best, 1], row_w[best, 2], row_w[best, 3]


@njit(cache=True)
def _gauge(outer, body):
    # max over edges of body (about the origin) of max over outer vertices of n.v / h
    k = body.shape[0]
    best = 0.0
    for e in range(k):
        px, py = body[e, 0], body[e, 1]
        qx, qy = body[(e + 1) % k, 0], body[(e + 1) % k, 1]
        nx = qy - py
        ny = px - qx
        h = nx * px + ny * py
        if h == 0.0:
            return np.inf
        sup = -np.inf
        for v in range(outer.shape[0]):
            t = (nx * outer[v, 0] + ny * outer[v, 1]) / h
            if t > sup:
                sup = t
        if sup > best:
            best = sup
    return best


@njit(cache=True, parallel=True)
def objective_batch(c_pts, d_pts, maps):
    n = maps.shape[0]
    out = np.empty(n)
    k = d_pts.shape[0]
    for i in prange(n):
        a, b, c, d = maps[i, 0], maps[i, 1], maps[i, 2], maps[i, 3]
        det = a * d - b * c
        if abs(det) < 1e-12:
            out[i] = np.inf
            continue
        e = np.empty((k, 2))
        for j in range(k):
            e[j, 0] = a * d_pts[j, 0] + b * d_pts[j, 1]
            e[j, 1] = c * d_pts[j, 0] + d * d_pts[j, 1]
        out[i] = _gauge(c_pts, e) * _gauge(e, c_pts)
    return out
