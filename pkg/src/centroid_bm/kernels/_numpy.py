"""Vectorised numpy fallbacks for the numba kernels."""
import numpy as np


def _frac_max(an, ad, bn, bd):
    take_b = bn * ad > an * bd
    return np.where(take_b, bn, an), np.where(take_b, bd, ad)


def oracle_min_gauge(steps):
    s = steps
    m = steps + 1
    coords = 2 * np.arange(m, dtype=np.int64) - s
    x2, y2 = np.meshgrid(coords, coords, indexing="ij")
    i2, j2 = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
    x2, y2, i2, j2 = x2.ravel(), y2.ravel(), i2.ravel(), j2.ravel()
    best = None
    for i1 in range(m):
        for j1 in range(m):
            x1, y1 = coords[i1], coords[j1]
            x3, y3 = -x1 - x2, -y1 - y2
            ok = (np.abs(x3) <= s) & (np.abs(y3) <= s)
            ok &= (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1) != 0
            if not ok.any():
                continue
            xs = (np.full(ok.sum(), x1), x2[ok], x3[ok])
            ys = (np.full(ok.sum(), y1), y2[ok], y3[ok])
            gn = np.zeros(ok.sum(), dtype=np.int64)
            gd = np.ones(ok.sum(), dtype=np.int64)
            for e in range(3):
                px, py, qx, qy = xs[e], ys[e], xs[(e + 1) % 3], ys[(e + 1) % 3]
                nx, ny = qy - py, px - qx
                h = nx * px + ny * py
                sup = (np.abs(nx) + np.abs(ny)) * s
                gn, gd = _frac_max(gn, gd, sup, np.abs(h))
            # exact argmin, first index on ties
            k = int(np.argmin(gn / gd))
            smaller = gn * gd[k] < gn[k] * gd
            while smaller.any():
                k = int(np.flatnonzero(smaller)[0])
                smaller = gn * gd[k] < gn[k] * gd
            k = int(np.flatnonzero(gn * gd[k] == gn[k] * gd)[0])
            cand = (int(gn[k]), int(gd[k]), i1, j1, int(i2[ok][k]), int(j2[ok][k]))
            if best is None or cand[0] * best[1] < best[0] * cand[1]:
                best = cand
    if best is None:
        return -1, 1, -1, -1, -1, -1
    return best


def _gauge_batch(outer, body):
    # outer: (N, m, 2) or (m, 2); body: (N, k, 2) or (k, 2)
    nxt = np.roll(body, -1, axis=-2)
    n = np.stack([nxt[..., 1] - body[..., 1], body[..., 0] - nxt[..., 0]], axis=-1)
    h = np.sum(n * body, axis=-1)
    proj = n @ np.swapaxes(outer, -1, -2)
    with np.errstate(divide="ignore", invalid="ignore"):
        # divide before the max: h < 0 for clockwise (reflected) bodies
        ratio = (proj / h[..., None]).max(axis=-1)
    return np.where(h == 0, np.inf, ratio).max(axis=-1)


def objective_batch(c_pts, d_pts, maps):
    lin = maps.reshape(-1, 2, 2)
    det = lin[:, 0, 0] * lin[:, 1, 1] - lin[:, 0, 1] * lin[:, 1, 0]
    e = np.einsum("nij,kj->nki", lin, d_pts)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        val = _gauge_batch(c_pts, e) * _gauge_batch(e, c_pts)
    return np.where(np.abs(det) < 1e-12, np.inf, val)
