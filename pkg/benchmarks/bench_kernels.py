"""Compare the compiled scan kernels against the pure-Python fallback.

Run directly: python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

import numpy as np

from quadellipse.kernels import BACKEND, _fallback
from quadellipse.kernels import scan_axis_ratio, scan_beta

N_GRID = 1_000_000
REPEATS = 5


def _time(fn, *args):
    best = float("inf")
    result = None
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_axis_ratio():
    # frame-style linear coefficient polynomials
    h, k, p, q = 4.0, 5.0, 3.0, 2.0
    pa = np.array([0.0, k, 0.0])
    pb = np.array([h, 0.0, 0.0])
    pc = np.array([0.5 * q, 0.5 * p, 0.0])
    root = 2.0 * np.sqrt(k * h * (k * h - p * q))
    lo = (2.0 * k * h - p * q - root) / (p * p)
    hi = (2.0 * k * h - p * q + root) / (p * p)
    t_active, r_active = _time(scan_axis_ratio, pa, pb, pc, lo, hi, N_GRID)
    t_py, r_py = _time(_fallback.scan_axis_ratio, pa, pb, pc, lo, hi, N_GRID)
    assert r_active[0] == r_py[0], (r_active, r_py)
    return "scan_axis_ratio", t_active, t_py


def bench_beta():
    s, t = 2.0, 3.0
    base = s + t - 1.0 + s * t
    root = 2.0 * np.sqrt(s * t * (s + t - 1.0))
    scale = t / (s * (s - 1.0) ** 2)
    lo, hi = scale * (base - root), scale * (base + root)
    t_active, r_active = _time(scan_beta, s, t, lo, hi, N_GRID)
    t_py, r_py = _time(_fallback.scan_beta, s, t, lo, hi, N_GRID)
    assert r_active[0] == r_py[0], (r_active, r_py)
    return "scan_beta", t_active, t_py


def main():
    print(f"active backend: {BACKEND}; grid size {N_GRID}, best of {REPEATS}")
    print(f"{'kernel':<18}{'active (s)':>12}{'python (s)':>12}{'speedup':>10}")
    for name, t_active, t_py in (bench_axis_ratio(), bench_beta()):
        print(f"{name:<18}{t_active:>12.4f}{t_py:>12.4f}{t_py / t_active:>10.2f}x")


if __name__ == "__main__":
    main()
