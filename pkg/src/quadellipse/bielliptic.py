"""Bielliptic quadrilaterals: minimal inscribed and circumscribed
eccentricities coincide.

Two constructive search paths are provided. A one-parameter family of general
quadrilaterals is bisected on the eccentricity gap, and the right-trapezoid
case is solved from a degree-11 integer polynomial whose middle real root
yields the trapezoid's shape parameter and optimal inscribed center in closed
chain, polished by a two-dimensional Newton step on the exact residuals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericError
from .inscribed import (
    min_ecc_inscribed,
    trapezoid_cubic,
    trapezoid_ecc_sq_at,
)
from .min_ecc import min_ecc_circumscribed, trapezoid_min_ecc_sq
from .quad import ConvexQuadrilateral, validate

BIELLIPTIC_TOL = 1e-9

# degree-11 resultant of the two trapezoid optimality conditions, in x = 2k
P_COEFFS = (32, -287, 1006, -1487, 160, 1762, -884, -822, 80, 333, 150, 21)


@dataclass(frozen=True)
class BiellipticReport:
    ecc_inscribed: float
    ecc_circumscribed: float
    difference: float
    is_bielliptic: bool
    tol: float


@dataclass(frozen=True)
class FamilyMember:
    """One quadrilateral of the bisection family, with both extremal
    eccentricities."""

    r: float
    s: float
    t: float
    quad: ConvexQuadrilateral
    ecc_inscribed: float
    ecc_circumscribed: float


@dataclass(frozen=True)
class TrapezoidBielliptic:
    """Closed-chain right-trapezoid solution: shape parameter t, inscribed
    center height k, the common value tau of the two closed-form eccentricity
    expressions, and the residuals of the two defining equations after
    polishing. tau is the value the closed-form chain equates; the measured
    eccentricity of the realized inscribed member differs because the
    inscribed formula's E(k) normalization is not the member's e^2 (see the
    inscribed solver's documentation)."""

    rho: float
    t: float
    k: float
    tau: float
    residual_cubic: float
    residual_shape: float


def classify_bielliptic(quad: ConvexQuadrilateral, tol=BIELLIPTIC_TOL) -> BiellipticReport:
    """Compare the minimal inscribed and circumscribed eccentricities."""
    _, geom_i, _ = min_ecc_inscribed(quad)
    _, geom_o, _ = min_ecc_circumscribed(quad)
    diff = geom_i.ecc - geom_o.ecc
    return BiellipticReport(
        ecc_inscribed=geom_i.ecc,
        ecc_circumscribed=geom_o.ecc,
        difference=diff,
        is_bielliptic=abs(diff) <= tol,
        tol=tol,
    )


def family_parameters(r):
    """The bisection family: s = 2 - 3r/2, t = (1/2 + sqrt(2)/2) r + 2 - 2r.

    r = 0 gives (2, 2); r = 2/3 lands exactly on the right trapezoid s = 1,
    t = 1 + sqrt(2)/3.
    """
    s = 2.0 - 1.5 * r
    t = (0.5 + 0.5 * math.sqrt(2.0)) * r + 2.0 - 2.0 * r
    return s, t


def family_member(r) -> FamilyMember:
    s, t = family_parameters(r)
    quad = validate([(0.0, 0.0), (1.0, 0.0), (s, t), (0.0, 1.0)])
    _, geom_i, _ = min_ecc_inscribed(quad)
    _, geom_o, _ = min_ecc_circumscribed(quad)
    return FamilyMember(
        r=r, s=s, t=t, quad=quad,
        ecc_inscribed=geom_i.ecc, ecc_circumscribed=geom_o.ecc,
    )


def find_bielliptic_in_family(tol=BIELLIPTIC_TOL, max_iter=80) -> FamilyMember:
    """Bisect the eccentricity gap along the family until it drops below tol.

    The gap changes sign between r = 0 and r = 1, so plain bisection on the
    difference converges; the loop also terminates early once the gap itself
    is small enough."""

    def gap(member: FamilyMember) -> float:
        return member.ecc_inscribed - member.ecc_circumscribed

    lo, hi = 0.0, 1.0
    m_lo, m_hi = family_member(lo), family_member(hi)
    g_lo, g_hi = gap(m_lo), gap(m_hi)
    if (g_lo > 0.0) == (g_hi > 0.0):
        raise NumericError("eccentricity gap does not change sign on the family")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        m_mid = family_member(mid)
        g_mid = gap(m_mid)
        if abs(g_mid) <= tol:
            return m_mid
        if (g_mid > 0.0) == (g_lo > 0.0):
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid
    raise NumericError(f"family bisection failed to close the gap below {tol}")


def poly_p(x):
    """The degree-11 integer polynomial in Horner form."""
    acc = 0.0
    for c in P_COEFFS:
        acc = acc * x + c
    return acc


def _poly_p_prime(x):
    acc = 0.0
    n = len(P_COEFFS) - 1
    for i, c in enumerate(P_COEFFS[:-1]):
        acc = acc * x + (n - i) * c
    return acc


def poly_p_real_roots(lo=-10.0, hi=10.0, n_scan=20000):
    """All real roots on [lo, hi] by sign scan + bisection, cross-checked
    against the eigenvalue-based companion solve."""
    xs = np.linspace(lo, hi, n_scan + 1)
    vals = poly_p(xs)
    roots = []
    for x1, x2, v1, v2 in zip(xs, xs[1:], vals, vals[1:]):
        if v1 == 0.0:
            roots.append(float(x1))
        elif (v1 < 0.0) != (v2 < 0.0):
            a, b = float(x1), float(x2)
            for _ in range(200):
                m = 0.5 * (a + b)
                if m == a or m == b:
                    break
                if (poly_p(m) < 0.0) == (v1 < 0.0):
                    a = m
                else:
                    b = m
            roots.append(0.5 * (a + b))
    if vals[-1] == 0.0:
        roots.append(float(xs[-1]))

    companion = np.roots(np.array(P_COEFFS, dtype=float))
    reference = sorted(float(z.real) for z in companion if abs(z.imag) < 1e-8)
    if len(reference) != len(roots):
        raise NumericError(
            f"root count mismatch: scan found {len(roots)}, companion {len(reference)}"
        )
    for a, b in zip(sorted(roots), reference):
        if abs(a - b) > 1e-6:
            raise NumericError(f"root cross-check failed: {a} vs {b}")
    return sorted(roots)


def trapezoid_shape_condition(t, k):
    """Second optimality residual tying the trapezoid parameter t to the
    inscribed center height k; vanishes together with the center cubic exactly
    at the bielliptic trapezoid."""
    return (
        16.0 * (t - 1.0) ** 2 * k**4
        + (16.0 * t**5 - 64.0 * t**4 + 96.0 * t**3 - 56.0 * t * t + 64.0 * t + 8.0)
        * k * k
        - 8.0 * t * (1.0 + t) * (t * t - 4.0 * t + 5.0) * (t * t + 1.0) * k
        + 4.0 * t**6 - 16.0 * t**5 + 24.0 * t**4 - 16.0 * t**3
        + 21.0 * t * t - 2.0 * t + 1.0
    )


def _newton_2d(f, x0, steps=20):
    """Damped 2-D Newton with forward-difference Jacobian; keeps the best
    iterate by residual norm."""
    x = np.array(x0, dtype=float)
    best_x = x.copy()
    best_r = float(np.linalg.norm(f(x)))
    for _ in range(steps):
        fx = np.asarray(f(x), dtype=float)
        jac = np.empty((2, 2))
        for j in range(2):
            h = 1e-7 * max(1.0, abs(x[j]))
            xp = x.copy()
            xp[j] += h
            jac[:, j] = (np.asarray(f(xp)) - fx) / h
        try:
            dx = np.linalg.solve(jac, -fx)
        except np.linalg.LinAlgError:
            break
        x = x + dx
        r = float(np.linalg.norm(f(x)))
        if r < best_r:
            best_x, best_r = x.copy(), r
        if r < 1e-14:
            break
    return best_x


def trapezoid_bielliptic_solve() -> TrapezoidBielliptic:
    """The unique bielliptic right trapezoid in canonical position.

    Chain: the middle real root rho of the degree-11 polynomial gives
    k = rho/2 and t = (2rho^3 - 3rho^2 - 2rho + 1)/(3rho^2 - 4rho - 1); the
    pair is then polished on the exact residuals and checked bielliptic."""
    candidates = [x for x in poly_p_real_roots() if 1.0 < x < 1.5]
    if len(candidates) != 1:
        raise NumericError(f"expected one root in (1, 1.5), found {candidates}")
    rho = candidates[0]
    t = (2.0 * rho**3 - 3.0 * rho * rho + 1.0 - 2.0 * rho) / (
        3.0 * rho * rho - 4.0 * rho - 1.0
    )
    k = 0.5 * rho

    def residuals(x):
        return (trapezoid_cubic(x[0], x[1]), trapezoid_shape_condition(x[0], x[1]))

    t, k = _newton_2d(residuals, (t, k))
    r1, r2 = residuals((t, k))
    if abs(r1) > 1e-8 or abs(r2) > 1e-8:
        raise NumericError(f"trapezoid polish left residuals {r1}, {r2}")

    tau_in = math.sqrt(trapezoid_ecc_sq_at(t, k))
    tau_out = math.sqrt(trapezoid_min_ecc_sq(t))
    if abs(tau_in - tau_out) > 1e-8:
        raise NumericError(
            f"inscribed/circumscribed eccentricities disagree: {tau_in} vs {tau_out}"
        )
    return TrapezoidBielliptic(
        rho=rho, t=float(t), k=float(k), tau=tau_in,
        residual_cubic=float(r1), residual_shape=float(r2),
    )
