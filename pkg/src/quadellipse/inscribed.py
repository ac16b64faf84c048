"""Ellipses inscribed in a convex quadrilateral.

The tangent family is built in dual space: the duals of inscribed conics pass
through the four side lines, and the two degenerate duals generated by the
diagonal point pairs span that pencil. Interpolating between them sweeps the
inscribed-ellipse centers along the open segment joining the two diagonal
midpoints. The primal conic is recovered by the adjugate.

Minimal eccentricity: a closed-form cubic solve on canonical right trapezoids,
a guarded numeric search over the tangent family otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .conic import (
    Conic,
    ConicClass,
    EllipseGeometry,
    classify,
    ellipse_geometry,
    transform_conic,
)
from .errors import (
    InputError,
    NumericError,
    ParameterDomainError,
    UnsupportedShapeError,
)
from .kernels import scan_axis_ratio
from .min_ecc import Diagnostics, _axis_ratio, _snap_circle, circle_polish
from .optimize import bisect_root, golden_max, newton_polish, parabolic_refine_max
from .quad import (
    ConvexQuadrilateral,
    QuadShape,
    canonicalize,
    diagonal_segment,
    incircle,
    is_tangential,
    match_canonical_right_trapezoid,
    validate,
)
from .pencil import canonical_center

LAMBDA_TOL = 1e-12
SCAN_POINTS = 1024


@dataclass(frozen=True)
class InscribedSolutionTrapezoid:
    """Closed-form minimal-eccentricity data for the canonical trapezoid.

    k0 is the optimal center height on the segment between 1/2 and t/2.
    ecc_sq evaluates the family's squared-eccentricity expression at k0; its
    E(k) normalization differs from the realized member's measured e^2 (the
    geometry returned by the solver carries the measured value), but the two
    share the same stationary point, so k0 minimizes both."""

    t: float
    k0: float
    Ek: float
    ecc_sq: float


def _dual_point_pair(p1, p2):
    """Degenerate dual conic of the point pair (p1, p2), unit-z homogeneous."""
    a = np.array([p1[0], p1[1], 1.0])
    b = np.array([p2[0], p2[1], 1.0])
    return 0.5 * (np.outer(a, b) + np.outer(b, a))


def _dual_generators(quad: ConvexQuadrilateral):
    pts = quad.points()
    d1 = _dual_point_pair(pts[0], pts[2])
    d2 = _dual_point_pair(pts[1], pts[3])
    return d1, d2


def _adjugate(m):
    return np.linalg.inv(m) * np.linalg.det(m)


def inscribed_member(quad: ConvexQuadrilateral, lam: float) -> Conic:
    """The inscribed ellipse at family parameter lam in the open (0, 1).

    lam -> center is a continuous monotone sweep of the open diagonal-midpoint
    segment, from the first diagonal's midpoint to the second's.
    """
    if quad.shape is QuadShape.PARALLELOGRAM:
        raise UnsupportedShapeError("inscribed family requires a nondegenerate center segment")
    if not (LAMBDA_TOL < lam < 1.0 - LAMBDA_TOL):
        raise ParameterDomainError(lam, (0.0, 1.0))
    d1, d2 = _dual_generators(quad)
    dual = (1.0 - lam) * d1 + lam * d2
    conic = Conic.from_matrix(_adjugate(dual))
    tag = classify(conic)
    if tag is not ConicClass.ELLIPSE:
        raise NumericError(f"interior family member classified as {tag}")
    return conic


def _member_quadratic_polys(quad: ConvexQuadrilateral):
    """Degree-2 coefficient polynomials in lam of the primal quadratic part."""
    d1, d2 = _dual_generators(quad)
    m0, m1 = d1, d2 - d1  # dual = m0 + lam * m1

    def lin(i, j):
        return (m0[i, j], m1[i, j])

    def prod(p, q):
        return np.array(
            [p[0] * q[0], p[0] * q[1] + p[1] * q[0], p[1] * q[1]]
        )

    pa = prod(lin(1, 1), lin(2, 2)) - prod(lin(1, 2), lin(1, 2))
    pb = prod(lin(0, 0), lin(2, 2)) - prod(lin(0, 2), lin(0, 2))
    pc = prod(lin(0, 2), lin(1, 2)) - prod(lin(0, 1), lin(2, 2))
    return pa, pb, pc


def trapezoid_cubic(t, k):
    """16k^3 - 12(t+1)k^2 + 4(2t-1)k + t + 1; its root in the center interval
    marks the minimal-eccentricity inscribed ellipse of the canonical trapezoid."""
    return 16.0 * k**3 - 12.0 * (t + 1.0) * k * k + 4.0 * (2.0 * t - 1.0) * k + t + 1.0


def _trapezoid_cubic_prime(t, k):
    return 48.0 * k * k - 24.0 * (t + 1.0) * k + 4.0 * (2.0 * t - 1.0)


def trapezoid_shape_factor(t, k):
    """(2k-1)(2k-t) over the quartic denominator; negative inside the interval."""
    den = (
        16.0 * (t - 1.0) ** 2 * k**4
        + (8.0 + 8.0 * t * t + 48.0 * t) * k * k
        - 32.0 * t * (1.0 + t) * k
        + 17.0 * t * t - 2.0 * t + 1.0
    )
    return (2.0 * k - 1.0) * (2.0 * k - t) / den


def trapezoid_ecc_sq_at(t, k):
    """Squared eccentricity of the inscribed ellipse centered at (1/2, k)."""
    e = trapezoid_shape_factor(t, k)
    return 2.0 / (1.0 + math.sqrt(1.0 - 16.0 * t * (1.0 - t) ** 2 * e))


def trapezoid_inscribed_solution(t) -> InscribedSolutionTrapezoid:
    """Closed-form minimal-eccentricity solve for the canonical trapezoid."""
    if abs(t - 1.0) < 1e-7:
        raise InputError("t too close to 1: the trapezoid degenerates to a parallelogram")
    lo, hi = min(0.5, 0.5 * t), max(0.5, 0.5 * t)
    k0 = bisect_root(lambda k: trapezoid_cubic(t, k), lo, hi)
    k0 = newton_polish(
        lambda k: trapezoid_cubic(t, k), lambda k: _trapezoid_cubic_prime(t, k), k0
    )
    return InscribedSolutionTrapezoid(
        t=t, k0=k0, Ek=trapezoid_shape_factor(t, k0), ecc_sq=trapezoid_ecc_sq_at(t, k0)
    )


def _canonical_trapezoid_quad(t) -> ConvexQuadrilateral:
    return validate([(0.0, 0.0), (1.0, 0.0), (1.0, t), (0.0, 1.0)])


def _member_with_center_height(quad: ConvexQuadrilateral, k0: float) -> Conic:
    """Member of the tangent family whose center y-coordinate equals k0.

    The dual matrix's last column is the homogeneous center, so the center is
    exactly the linear interpolation of the diagonal midpoints and lam solves
    in closed form."""
    m1, m2 = quad.diagonal_midpoints()
    lam = (k0 - m1[1]) / (m2[1] - m1[1])
    return inscribed_member(quad, lam)


def min_ecc_inscribed(quad: ConvexQuadrilateral):
    """Returns (conic, geometry, diagnostics) in the original coordinates."""
    if quad.shape is QuadShape.PARALLELOGRAM:
        raise UnsupportedShapeError("no extremal inscribed ellipse machinery for parallelograms")

    if is_tangential(quad, tol=1e-12):
        (cx, cy), radius = incircle(quad)
        conic = Conic(
            1.0, 1.0, 0.0, -2.0 * cx, -2.0 * cy, cx * cx + cy * cy - radius * radius
        )
        geom = EllipseGeometry(center=(cx, cy), a=radius, b=radius, phi=0.0, ecc=0.0)
        return conic, geom, Diagnostics(path="incircle", iterations=0, residuals={})

    if quad.shape is QuadShape.TRAPEZOID:
        matched = match_canonical_right_trapezoid(quad)
        if matched is not None:
            t, iso = matched
            sol = trapezoid_inscribed_solution(t)
            canonical = _canonical_trapezoid_quad(t)
            member = _member_with_center_height(canonical, sol.k0)
            conic = transform_conic(member, iso.inverse())
            geom = _snap_circle(ellipse_geometry(conic))
            diag = Diagnostics(
                path="closed_form_trapezoid",
                iterations=0,
                residuals={
                    "k0": sol.k0,
                    "cubic": trapezoid_cubic(t, sol.k0),
                    "ecc_sq_formula": sol.ecc_sq,
                },
            )
            return conic, geom, diag

    pa, pb, pc = _member_quadratic_polys(quad)
    j, lam0, r0 = scan_axis_ratio(pa, pb, pc, 0.0, 1.0, SCAN_POINTS)
    if j < 0:
        raise NumericError("no inscribed ellipse found on the scan grid")
    step = 1.0 / (SCAN_POINTS + 1)

    def ratio_at(lam):
        d1, d2 = _dual_generators(quad)
        return _axis_ratio(Conic.from_matrix(_adjugate((1.0 - lam) * d1 + lam * d2)))

    lam_opt, r_opt, iters = golden_max(
        ratio_at, max(LAMBDA_TOL, lam0 - step), min(1.0 - LAMBDA_TOL, lam0 + step)
    )
    lam_opt = parabolic_refine_max(ratio_at, lam_opt, 1e-5, 0.0, 1.0)
    lam_opt = circle_polish(pa, pb, pc, lam_opt, LAMBDA_TOL, 1.0 - LAMBDA_TOL, ratio_at)
    r_opt = ratio_at(lam_opt)
    if r_opt < r0 - 1e-12:
        raise NumericError(f"polished optimum {r_opt} lost to scan value {r0}")
    conic = inscribed_member(quad, lam_opt)
    geom = _snap_circle(ellipse_geometry(conic))
    diag = Diagnostics(
        path="numeric",
        iterations=iters,
        residuals={"axis_ratio": r_opt, "parameter": lam_opt},
    )
    return conic, geom, diag


def theorem_center_separation(quad: ConvexQuadrilateral, u: float) -> float:
    """Distance from a circumscribed member's center to the closed
    diagonal-midpoint segment.

    Inscribed and circumscribed ellipses never share a center, so the distance
    is positive on the whole ellipse interval except at the two analytic
    excluded parameters, where the center formula lands exactly on a segment
    endpoint. No domain check is applied: the excluded parameters themselves
    may sit outside the ellipse interval and are legitimate probes here."""
    if quad.shape is QuadShape.PARALLELOGRAM:
        raise UnsupportedShapeError("degenerate center segment")
    canon = canonicalize(quad)
    if canon.kind == "general":
        center_c = canonical_center(canon.s, canon.t, u)
    else:
        t = canon.t
        den = 4.0 * u - (t - 1.0) ** 2
        center_c = ((2.0 * u + t - 1.0) / den, (1.0 + t) * u / den)
    center = canon.map.inverse().apply(np.asarray(center_c))
    return diagonal_segment(quad).distance_to(center)


def excluded_parameters(s, t):
    """The two parameter values whose centers coincide with the diagonal
    midpoints: u = +-(t^2 - t)/(s^2 - s)."""
    base = (t * t - t) / (s * s - s)
    return base, -base
