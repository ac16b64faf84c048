"""The unique minimal-eccentricity circumscribed ellipse.

Three computation paths, recorded in the diagnostics:
  * closed form on a right-angle frame (when the frame configuration exists),
  * closed form on the canonical right trapezoid (congruence up to isometry),
  * guarded 1-D numeric maximization of b^2/a^2 over the side-line pencil in
    the quadrilateral's original coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .conic import Conic, EllipseGeometry, ellipse_geometry, transform_conic
from .errors import (
    FrameUnavailableError,
    NumericError,
    ParameterDomainError,
    UnsupportedShapeError,
)
from .kernels import scan_axis_ratio
from .optimize import golden_max, parabolic_refine_max
from .pencil import FramePencil, LinePairPencil, TrapezoidPencil
from .quad import (
    ConvexQuadrilateral,
    QuadShape,
    SteinerFrame,
    circumcircle,
    is_cyclic,
    match_canonical_right_trapezoid,
    steiner_frame,
)

CIRCLE_SNAP_TOL = 1e-8
EXACT_CIRCLE_TOL = 1e-12
SCAN_POINTS = 1024


@dataclass(frozen=True)
class SteinerSolution:
    """Closed-form optimum data on a right-angle frame."""

    v0: float
    W: float
    r: float
    sumST: float  # hp + kq
    diffST: float  # hp - kq
    ratio_ba: float
    cot_phi: float


@dataclass(frozen=True)
class ConjugateDirections:
    M1: float
    M2: float


@dataclass(frozen=True)
class Diagnostics:
    path: str
    iterations: int
    residuals: dict


def ratio_f(frame: SteinerFrame, v) -> float:
    """b^2/a^2 of the pencil member at v: g(v) over the squared denominator."""
    pencil = FramePencil(frame)
    lo, hi = pencil.interval()
    if not (lo < v < hi):
        raise ParameterDomainError(v, (lo, hi))
    h, k, p, q = frame.h, frame.k, frame.p, frame.q
    rad = math.hypot(k * v - h, v * p + q)
    return pencil.g(v) / ((k * v + h) + rad) ** 2


def v_star(frame: SteinerFrame) -> SteinerSolution:
    h, k, p, q = frame.h, frame.k, frame.p, frame.q
    v0 = (q * q * k + 2.0 * k * h * h - h * p * q) / (
        2.0 * k * k * h - k * p * q + h * p * p
    )
    w = 4.0 * k * k * h * h + (h * p - q * k) ** 2
    r = math.sqrt(h * k) * math.sqrt(h * k - p * q)
    sum_st = h * p + k * q
    diff_st = h * p - k * q
    ratio_ba = 2.0 * r / (math.sqrt(w) + sum_st)
    cot_phi = (k * q - h * p + math.sqrt(w)) / (2.0 * k * h)
    return SteinerSolution(
        v0=v0,
        W=w,
        r=r,
        sumST=sum_st,
        diffST=diff_st,
        ratio_ba=ratio_ba,
        cot_phi=cot_phi,
    )


def g_at_v0(frame: SteinerFrame) -> float:
    """Closed form for g(v0): 4kh(kh - pq) W / (2k^2h - kpq + hp^2)^2."""
    h, k, p, q = frame.h, frame.k, frame.p, frame.q
    w = 4.0 * k * k * h * h + (h * p - q * k) ** 2
    den = 2.0 * k * k * h - k * p * q + h * p * p
    return 4.0 * k * h * (k * h - p * q) * w / (den * den)


def common_conjugate_directions(frame: SteinerFrame) -> ConjugateDirections:
    """The one slope pair conjugate in every member of the frame pencil."""
    h, k, p, q = frame.h, frame.k, frame.p, frame.q
    r = math.sqrt(h * k) * math.sqrt(h * k - p * q)
    return ConjugateDirections(M1=-k / p + r / (h * p), M2=-k / p - r / (h * p))


def equal_conjugate_directions(sol: SteinerSolution, geom: EllipseGeometry):
    """Slopes of the optimal member's equal conjugate diameters.

    geom must be the optimal member's geometry in frame coordinates. The
    major axis has negative slope there, so its angle lies in (pi/2, pi) and
    the acute rotation attaches to the minor axis.
    """
    theta = math.atan(geom.b / geom.a)
    phi = geom.phi - math.pi / 2.0 if geom.phi >= math.pi / 2.0 else geom.phi + math.pi / 2.0
    return (
        math.tan(phi + theta - math.pi / 2.0),
        math.tan(phi - theta - math.pi / 2.0),
    )


def trapezoid_min_ecc_u(t) -> float:
    """Eccentricity-minimizing pencil parameter of the canonical trapezoid."""
    return 0.5 * (t * t - 2.0 * t + 3.0)


def trapezoid_min_ecc_sq(t) -> float:
    """Squared minimal eccentricity over the canonical trapezoid pencil:
    2|t-1| / (sqrt((t-1)^2 + 4) + |t-1|)."""
    d = abs(t - 1.0)
    return 2.0 * d / (math.sqrt(d * d + 4.0) + d)


def trapezoid_ecc_sq(t, u) -> float:
    """Squared eccentricity of the canonical trapezoid member at u."""
    rad = math.hypot(t - 1.0, u - 1.0)
    return 2.0 * rad / (u + 1.0 + rad)


def _axis_ratio(conic: Conic) -> float:
    a, b, c = conic.A, conic.B, conic.C
    if a * b - c * c <= 0.0:
        return -math.inf
    tr = abs(a + b)
    spread = math.hypot(b - a, 2.0 * c)
    return (tr - spread) / (tr + spread)


def _snap_circle(geom: EllipseGeometry) -> EllipseGeometry:
    if geom.ecc < CIRCLE_SNAP_TOL:
        return EllipseGeometry(
            center=geom.center, a=geom.a, b=geom.b, phi=0.0, ecc=geom.ecc
        )
    return geom


def circle_polish(pa, pb, pc, x, lo, hi, ratio_at):
    """Candidate parameters minimizing the axis spread (B-A)^2 + 4C^2.

    Near a circular member 1 - b^2/a^2 is |linear| in the parameter, which
    caps any bracketing optimizer at about sqrt(eps) in eccentricity. The
    squared spread is a smooth polynomial, so its stationary points recover
    the circle to full precision. Returns whichever candidate (including x
    itself) maximizes the ratio."""
    diff = np.asarray(pb, dtype=float) - np.asarray(pa, dtype=float)
    spread_sq = npoly.polymul(diff, diff) + 4.0 * npoly.polymul(
        np.asarray(pc, dtype=float), np.asarray(pc, dtype=float)
    )
    deriv = npoly.polyder(spread_sq)
    if not np.any(deriv != 0.0):
        return x
    candidates = [x]
    for root in np.roots(deriv[::-1]):
        if abs(root.imag) < 1e-9 and lo < root.real < hi:
            candidates.append(float(root.real))
    return max(candidates, key=ratio_at)


def maximize_pencil_axis_ratio(pencil, n_scan=SCAN_POINTS):
    """Dense scan seeded golden-section maximization of b^2/a^2.

    Returns (x_best, ratio_best, iterations). The polished optimum is
    checked against the scan; losing to the scan raises NumericError.
    """
    pa, pb, pc = pencil.quadratic_part_polys()
    lo, hi = pencil.interval()
    compact = math.isinf(hi)

    def ratio_at(x):
        return _axis_ratio(pencil.raw_member(x))

    if compact:
        j, x0, r0 = scan_axis_ratio(pa, pb, pc, lo, hi, n_scan, compact=True)
        l0 = lo / (1.0 + lo)
        step = (1.0 - l0) / (n_scan + 1)
        l_best = l0 + (j + 1) * step
        ratio_l = lambda l: ratio_at(l / (1.0 - l))
        l_opt, r_opt, iters = golden_max(
            ratio_l,
            max(l0, l_best - step),
            min(1.0 - 1e-15, l_best + step),
        )
        l_opt = parabolic_refine_max(ratio_l, l_opt, 1e-5 * (1.0 - l0), l0, 1.0)
        r_opt = ratio_l(l_opt)
        x_opt = l_opt / (1.0 - l_opt)
    else:
        j, x0, r0 = scan_axis_ratio(pa, pb, pc, lo, hi, n_scan)
        step = (hi - lo) / (n_scan + 1)
        x_opt, r_opt, iters = golden_max(
            ratio_at, max(lo, x0 - step), min(hi, x0 + step)
        )
        x_opt = parabolic_refine_max(
            ratio_at, x_opt, 1e-5 * max(1.0, abs(x_opt)), lo, hi
        )
        r_opt = ratio_at(x_opt)
    x_opt = circle_polish(pa, pb, pc, x_opt, lo, hi, ratio_at)
    r_opt = ratio_at(x_opt)
    if j < 0 or not math.isfinite(r_opt):
        raise NumericError("no ellipse member found on the scan grid")
    if r_opt < r0 - 1e-12:
        raise NumericError(
            f"polished optimum {r_opt} lost to scan value {r0} at x={x0}"
        )
    return x_opt, r_opt, iters


def min_ecc_circumscribed(quad: ConvexQuadrilateral):
    """Returns (conic, geometry, diagnostics) in the original coordinates."""
    if quad.shape is QuadShape.PARALLELOGRAM:
        raise UnsupportedShapeError("no extremal circumscribed ellipse machinery for parallelograms")

    if is_cyclic(quad, tol=EXACT_CIRCLE_TOL):
        (cx, cy), radius = circumcircle(quad)
        conic = Conic(
            1.0, 1.0, 0.0, -2.0 * cx, -2.0 * cy, cx * cx + cy * cy - radius * radius
        )
        geom = EllipseGeometry(center=(cx, cy), a=radius, b=radius, phi=0.0, ecc=0.0)
        return conic, geom, Diagnostics(path="circumcircle", iterations=0, residuals={})

    if quad.shape is QuadShape.GENERAL:
        try:
            frame = steiner_frame(quad)
        except FrameUnavailableError:
            frame = None
        if frame is not None:
            sol = v_star(frame)
            member = FramePencil(frame).member(sol.v0)
            conic = transform_conic(member, frame.isometry.inverse())
            geom = _snap_circle(ellipse_geometry(conic))
            diag = Diagnostics(
                path="closed_form_frame",
                iterations=0,
                residuals={"g_v0": g_at_v0(frame)},
            )
            return conic, geom, diag
    else:
        matched = match_canonical_right_trapezoid(quad)
        if matched is not None:
            t, iso = matched
            u = trapezoid_min_ecc_u(t)
            member = TrapezoidPencil(t).member(u)
            conic = transform_conic(member, iso.inverse())
            geom = _snap_circle(ellipse_geometry(conic))
            diag = Diagnostics(
                path="closed_form_trapezoid",
                iterations=0,
                residuals={
                    "u": u,
                    "ecc_sq_closed_form": trapezoid_min_ecc_sq(t),
                },
            )
            return conic, geom, diag

    pencil = LinePairPencil(quad)
    x_opt, r_opt, iters = maximize_pencil_axis_ratio(pencil)
    conic = pencil.raw_member(x_opt)
    geom = _snap_circle(ellipse_geometry(conic))
    diag = Diagnostics(
        path="numeric",
        iterations=iters,
        residuals={"axis_ratio": r_opt, "parameter": x_opt},
    )
    return conic, geom, diag
