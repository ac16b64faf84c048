"""Small deterministic 1-D solvers shared by the extremal-ellipse modules."""

from __future__ import annotations

import math

from .errors import NumericError

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(f, lo, hi, tol=1e-12, max_iter=300):
    """Golden-section maximization on [lo, hi]; deterministic, fixed caps.

    Returns (x, f(x), iterations). The bracket is assumed to contain a single
    interior maximum (callers seed it from a dense scan).
    """
    a, b = lo, hi
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    it = 0
    while (b - a) > tol * max(1.0, abs(a), abs(b)):
        it += 1
        if it > max_iter:
            raise NumericError(
                f"golden section failed to converge, bracket [{a}, {b}]"
            )
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
    x = 0.5 * (a + b)
    return x, f(x), it


def golden_min(f, lo, hi, tol=1e-12, max_iter=300):
    x, fx, it = golden_max(lambda v: -f(v), lo, hi, tol=tol, max_iter=max_iter)
    return x, -fx, it


def parabolic_refine_max(f, x0, h0, lo, hi, rounds=4):
    """Sharpen a near-optimal maximizer by successive three-point parabola fits.

    Golden section alone locates the argmax of a smooth unimodal function to
    about sqrt(eps) in function value; fitting a parabola through
    (x-h, x, x+h) and jumping to its vertex recovers nearly full precision,
    which matters when the optimum value itself must be resolved (for example
    an eccentricity that should vanish). Returns the refined x.
    """
    x = x0
    h = h0
    for _ in range(rounds):
        xm, xp = x - h, x + h
        if xm <= lo or xp >= hi:
            break
        fm, f0, fp = f(xm), f(x), f(xp)
        curv = fm - 2.0 * f0 + fp
        if not (math.isfinite(curv) and curv < 0.0):
            break
        dx = 0.5 * h * (fm - fp) / curv
        x_new = min(hi, max(lo, x + dx))
        if f(x_new) >= f0:
            x = x_new
        h *= 0.03
    return x


def bisect_root(f, lo, hi, tol=0.0, max_iter=200):
    """Bisection for a sign change on [lo, hi]; refines to machine width."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise NumericError(f"no sign change on [{lo}, {hi}]: f={flo}, {fhi}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
        if (hi - lo) <= tol * max(1.0, abs(lo), abs(hi)):
            break
    return 0.5 * (lo + hi)


def newton_polish(f, fprime, x0, steps=8):
    """A few guarded Newton steps; returns the iterate with smallest |f|."""
    best_x, best_r = x0, abs(f(x0))
    x = x0
    for _ in range(steps):
        d = fprime(x)
        if d == 0.0 or not math.isfinite(d):
            break
        x = x - f(x) / d
        if not math.isfinite(x):
            break
        r = abs(f(x))
        if r < best_r:
            best_x, best_r = x, r
    return best_x
