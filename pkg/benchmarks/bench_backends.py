#!/usr/bin/env python3
"""Compare the numba and numpy kernel backends on the hot paths.

The dominant cost of a trace is evaluating the cross-term trigonometric sum
on dense theta grids (grid points x radii x terms).  This script times both
backend implementations directly (no env flag needed) plus one full trace
under the active backend.

Run:  python3 benchmarks/bench_backends.py
"""

import time

import numpy as np

from maxmod import TraceConfig, expand, parse_poly, trace
from maxmod import _kernels


def time_call(fn, *args, repeats=5, inner=20):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for _ in range(inner):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / inner)
    return best


def bench_kernels():
    cases = {
        "cubic (3 cross terms)": parse_poly("1,0,1,1i"),
        "degree 8 (36 cross terms)": parse_poly("1,1,1i,1,-1,1i,0.5,1,2"),
    }
    print(f"active backend: {_kernels.BACKEND}")
    print(f"{'case':<28}{'grid':>8}{'numpy':>12}{'numba':>12}{'speedup':>10}")
    for name, p in cases.items():
        e = expand(p)
        for grid in (4096, 65536):
            thetas = np.linspace(-np.pi, np.pi, grid, endpoint=False)
            ap = e.cross_amps * 0.1**e.cross_pows
            args = (ap, e.cross_freqs, e.cross_phas, thetas)
            if _kernels.HAVE_NUMBA:
                _kernels.osc_sum_numba(*args)  # compile before timing
            t_np = time_call(_kernels.osc_sum_numpy, *args)
            if _kernels.HAVE_NUMBA:
                t_nb = time_call(_kernels.osc_sum_numba, *args)
                ratio = f"{t_np / t_nb:9.1f}x"
                t_nb_s = f"{t_nb * 1e6:10.1f}us"
            else:
                ratio, t_nb_s = "      n/a", "       n/a"
            print(f"{name:<28}{grid:>8}{t_np * 1e6:10.1f}us{t_nb_s}{ratio}")


def bench_trace():
    p = parse_poly("1,0,1,1i")
    cfg = TraceConfig(r_min=1e-3, r_max=0.3, n_radii=200)
    trace(p, cfg)  # warm
    t0 = time.perf_counter()
    res = trace(p, cfg)
    dt = time.perf_counter() - t0
    print(
        f"\nfull trace (200 radii, grid 4096, backend {_kernels.BACKEND}): "
        f"{dt * 1e3:.0f} ms, {res.n_components} components"
    )


if __name__ == "__main__":
    bench_kernels()
    bench_trace()
