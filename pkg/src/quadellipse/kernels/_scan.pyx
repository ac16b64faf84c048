# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid-scan kernels. Must mirror `_fallback.py` exactly."""

from libc.math cimport INFINITY, hypot


def scan_axis_ratio(pa, pb, pc, double lo, double hi, long n, bint compact=False):
    cdef double a0 = pa[0], a1 = pa[1], a2 = pa[2]
    cdef double b0 = pb[0], b1 = pb[1], b2 = pb[2]
    cdef double c0 = pc[0], c1 = pc[1], c2 = pc[2]
    cdef double l0 = 0.0, step, x, l, a, b, c, tr, spread, ratio
    cdef double best_ratio = -INFINITY, best_x = 0.0
    cdef long j, best_j = -1

    if compact:
        l0 = lo / (1.0 + lo)
        step = (1.0 - l0) / (n + 1)
    else:
        step = (hi - lo) / (n + 1)

    for j in range(n):
        if compact:
            l = l0 + (j + 1) * step
            x = l / (1.0 - l)
        else:
            x = lo + (j + 1) * step
        a = a0 + a1 * x + a2 * x * x
        b = b0 + b1 * x + b2 * x * x
        c = c0 + c1 * x + c2 * x * x
        if a * b - c * c <= 0.0:
            continue
        tr = a + b
        if tr < 0.0:
            tr = -tr
        elif tr == 0.0:
            continue
        spread = hypot(b - a, 2.0 * c)
        ratio = (tr - spread) / (tr + spread)
        if ratio > best_ratio:
            best_ratio = ratio
            best_x = x
            best_j = j
    return best_j, best_x, best_ratio


def scan_beta(double s, double t, double lo, double hi, long n):
    cdef double ca = s * s * (s - 1.0) * (s - 1.0)
    cdef double cb = -2.0 * s * t * (s * t + s + t - 1.0)
    cdef double cc = t * t * (t - 1.0) * (t - 1.0)
    cdef double scale = (s * t) * (s * t) * (s * t * (s + t - 1.0)) * (s * t * (s + t - 1.0))
    cdef double step = (hi - lo) / (n + 1)
    cdef double u, alpha, num, beta
    cdef double best_beta = INFINITY, best_u = 0.0
    cdef long j, best_j = -1

    for j in range(n):
        u = lo + (j + 1) * step
        alpha = (ca * u + cb) * u + cc
        if alpha >= 0.0:
            continue
        num = 4.0 * u * u * (s * u + t) * (s * u + t) * scale
        beta = -num / (alpha * alpha * alpha)
        if beta < best_beta:
            best_beta = beta
            best_u = u
            best_j = j
    return best_j, best_u, best_beta
