"""Pure-numpy implementations of the grid-scan kernels.

Semantics must match the compiled extension in `_scan.pyx` exactly: the
benchmark and the kernel tests compare the two backends element for element.
"""

import numpy as np


def _grid(lo, hi, n, compact):
    if compact:
        l0 = lo / (1.0 + lo)
        ls = l0 + (np.arange(1, n + 1, dtype=float) / (n + 1)) * (1.0 - l0)
        return ls / (1.0 - ls)
    return lo + (np.arange(1, n + 1, dtype=float) / (n + 1)) * (hi - lo)


def scan_axis_ratio(pa, pb, pc, lo, hi, n, compact=False):
    """Maximize the squared axis ratio b^2/a^2 of a conic family on a grid.

    pa, pb, pc: length-3 coefficient arrays of the quadratic-part polynomials
    A(x), B(x), C(x) (value = p[0] + p[1] x + p[2] x^2). The ratio of a member
    is ((A+B) - sqrt((B-A)^2 + 4C^2)) / ((A+B) + sqrt((B-A)^2 + 4C^2));
    members with AB - C^2 <= 0 are skipped. For compact=True the grid runs
    over l in (lo/(1+lo), 1) with x = l/(1-l), covering (lo, inf).

    Returns (best_index, best_x, best_ratio).
    """
    pa = np.asarray(pa, dtype=float)
    pb = np.asarray(pb, dtype=float)
    pc = np.asarray(pc, dtype=float)
    xs = _grid(lo, hi, int(n), compact)
    a = pa[0] + pa[1] * xs + pa[2] * xs * xs
    b = pb[0] + pb[1] * xs + pb[2] * xs * xs
    c = pc[0] + pc[1] * xs + pc[2] * xs * xs
    # orient so the trace is positive (coefficient scale is arbitrary);
    # AB - C^2 > 0 guarantees the trace is nonzero
    tr = np.abs(a + b)
    spread = np.hypot(b - a, 2.0 * c)
    ratio = np.where(
        a * b - c * c > 0.0, (tr - spread) / (tr + spread), -np.inf
    )
    j = int(np.argmax(ratio))
    return j, float(xs[j]), float(ratio[j])


def scan_beta(s, t, lo, hi, n):
    """Minimize the squared-area objective of the canonical circumscribed
    pencil, beta(u) = -4 u^2 (su+t)^2 s^2 t^2 (st(s+t-1))^2 / alpha(u)^3,
    on an n-point interior grid over (lo, hi).

    Returns (best_index, best_u, best_beta).
    """
    us = _grid(lo, hi, int(n), False)
    alpha = (
        s * s * (s - 1.0) ** 2 * us * us
        - 2.0 * s * t * (s * t + s + t - 1.0) * us
        + t * t * (t - 1.0) ** 2
    )
    num = 4.0 * us * us * (s * us + t) ** 2 * (s * t) ** 2 * (s * t * (s + t - 1.0)) ** 2
    beta = np.where(alpha < 0.0, -num / (alpha * alpha * alpha), np.inf)
    j = int(np.argmin(beta))
    return j, float(us[j]), float(beta[j])
