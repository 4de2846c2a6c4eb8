"""Time the numba and numpy kernel backends on the same inputs.

    python benchmarks/bench_kernels.py [--oracle-steps 16] [--maps 20000] [--repeat 3]

The first numba call includes JIT compilation and is reported separately.
Both backends must agree exactly on the oracle and to 1e-12 on the objective.
"""
import argparse
import time

import numpy as np

from centroid_bm import kernels


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--oracle-steps", type=int, default=16)
    ap.add_argument("--maps", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    square = np.array([[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]])
    tri = np.array([[-1.0, -2 / 3], [1.0, -2 / 3], [0.0, 4 / 3]])
    maps = np.random.default_rng(0).uniform(-1, 1, size=(args.maps, 4))

    t0 = time.perf_counter()
    kernels.oracle_min_gauge(3, "numba")
    kernels.objective_batch(square, tri, maps[:8], "numba")
    print(f"numba first call (JIT): {time.perf_counter() - t0:.2f} s")

    print(f"{'kernel':<28}{'numba s':>10}{'numpy s':>10}{'speedup':>10}")
    rows = [
        (f"oracle_min_gauge({args.oracle_steps})", lambda b: kernels.oracle_min_gauge(args.oracle_steps, b)),
        (f"objective_batch({args.maps})", lambda b: kernels.objective_batch(square, tri, maps, b)),
    ]
    for name, run in rows:
        t_nb, out_nb = best_of(lambda: run("numba"), args.repeat)
        t_np, out_np = best_of(lambda: run("numpy"), args.repeat)
        if isinstance(out_nb, tuple):
            assert out_nb == out_np, (out_nb, out_np)
        else:
            finite = np.isfinite(out_np)
            assert np.array_equal(finite, np.isfinite(out_nb))
            assert np.allclose(out_nb[finite], out_np[finite], rtol=1e-12, atol=0)
        print(f"{name:<28}{t_nb:>10.4f}{t_np:>10.4f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
