"""One-parameter families of conics through the four vertices.

Four parameterizations are exposed: the right-angle frame form, the canonical
(s, t) form, the canonical trapezoid form, and a coordinate-free side-line
product form usable in the quadrilateral's original coordinates. Members are
real ellipses exactly on an open parameter interval; evaluation at or beyond
an endpoint is an error, not a degenerate conic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .conic import Conic, ellipse_geometry
from .errors import ParameterDomainError
from .quad import PARALLEL_TOL, ConvexQuadrilateral, SteinerFrame

ENDPOINT_REL_TOL = 1e-12


def _check_open(x, lo, hi):
    ok = (x - lo) > ENDPOINT_REL_TOL * max(1.0, abs(lo), abs(x))
    if math.isfinite(hi):
        ok = ok and (hi - x) > ENDPOINT_REL_TOL * max(1.0, abs(hi), abs(x))
    if not ok:
        raise ParameterDomainError(x, (lo, hi))


def compactify(lo):
    """Map the semi-infinite interval (lo, inf) onto l in (l0, 1), u = l/(1-l)."""
    l0 = lo / (1.0 + lo)

    def u_of_l(l):
        return l / (1.0 - l)

    return l0, u_of_l


class _PencilBase:
    kind = "abstract"

    def interval(self):
        raise NotImplementedError

    def raw_member(self, x) -> Conic:
        raise NotImplementedError

    def member(self, x) -> Conic:
        lo, hi = self.interval()
        _check_open(x, lo, hi)
        return self.raw_member(x)

    def center(self, x):
        geom = ellipse_geometry(self.member(x))
        return geom.center

    def axes_sq(self, x):
        geom = ellipse_geometry(self.member(x))
        return geom.a**2, geom.b**2

    def grid(self, n):
        """n interior parameters, uniformly in the (compactified) interval."""
        lo, hi = self.interval()
        if math.isinf(hi):
            l0, u_of_l = compactify(lo)
            ls = l0 + (np.arange(1, n + 1) / (n + 1)) * (1.0 - l0)
            return u_of_l(ls)
        return lo + (np.arange(1, n + 1) / (n + 1)) * (hi - lo)


@dataclass
class FramePencil(_PencilBase):
    """kv x^2 + h y^2 + (vp+q) xy - vkp x - hq y = 0 in frame coordinates."""

    frame: SteinerFrame
    kind = "frame_v"

    def g(self, v):
        h, k, p, q = self.frame.h, self.frame.k, self.frame.p, self.frame.q
        return -(p * p) * v * v + (4.0 * k * h - 2.0 * p * q) * v - q * q

    def interval(self):
        h, k, p, q = self.frame.h, self.frame.k, self.frame.p, self.frame.q
        root = 2.0 * math.sqrt(k * h * (k * h - p * q))
        return (
            (2.0 * k * h - p * q - root) / (p * p),
            (2.0 * k * h - p * q + root) / (p * p),
        )

    def raw_member(self, v) -> Conic:
        h, k, p, q = self.frame.h, self.frame.k, self.frame.p, self.frame.q
        return Conic(k * v, h, 0.5 * (v * p + q), -v * k * p, -h * q, 0.0)

    def axes_sq(self, v):
        lo, hi = self.interval()
        _check_open(v, lo, hi)
        h, k, p, q = self.frame.h, self.frame.k, self.frame.p, self.frame.q
        num = 2.0 * k * h * v * (v * p * p * (k - q) + q * q * (h - p))
        den1 = 4.0 * k * h * v - (v * p + q) ** 2
        rad = math.hypot(k * v - h, v * p + q)
        a2 = num / (den1 * ((k * v + h) - rad))
        b2 = num / (den1 * ((k * v + h) + rad))
        return a2, b2


@dataclass
class CanonicalPencil(_PencilBase):
    """st u x^2 + st y^2 - (s(s-1)u + t(t-1)) xy - st u x - st y = 0 through
    (0,0), (1,0), (0,1), (s,t)."""

    s: float
    t: float
    kind = "canonical_u"

    def alpha(self, u):
        s, t = self.s, self.t
        return (
            s * s * (s - 1.0) ** 2 * u * u
            - 2.0 * s * t * (s * t + s + t - 1.0) * u
            + t * t * (t - 1.0) ** 2
        )

    def interval(self):
        s, t = self.s, self.t
        base = s + t - 1.0 + s * t
        root = 2.0 * math.sqrt(s * t * (s + t - 1.0))
        scale = t / (s * (s - 1.0) ** 2)
        return scale * (base - root), scale * (base + root)

    def raw_member(self, u) -> Conic:
        s, t = self.s, self.t
        return Conic(
            s * t * u,
            s * t,
            -0.5 * (s * (s - 1.0) * u + t * (t - 1.0)),
            -s * t * u,
            -s * t,
            0.0,
        )

    def center(self, u):
        lo, hi = self.interval()
        _check_open(u, lo, hi)
        return canonical_center(self.s, self.t, u)

    def axes_sq(self, u):
        lo, hi = self.interval()
        _check_open(u, lo, hi)
        s, t = self.s, self.t
        num = 2.0 * u * (s * u + t) * s * s * t * t * (s + t - 1.0)
        den1 = 4.0 * s * t * (s + t - 1.0) * u - (
            s * (s - 1.0) * u - t * (t - 1.0)
        ) ** 2
        rad = math.sqrt(
            t * t * (s * s + (t - 1.0) ** 2)
            - 2.0 * s * t * (s + t - 1.0) * u
            + s * s * (t * t + (s - 1.0) ** 2) * u * u
        )
        a2 = num / (den1 * (s * t * (u + 1.0) - rad))
        b2 = num / (den1 * (s * t * (u + 1.0) + rad))
        return a2, b2


def canonical_center(s, t, u):
    """Closed-form member center in canonical coordinates.

    Evaluates the rational expressions directly, with no domain check, so the
    analytic excluded parameters u = +-(t^2-t)/(s^2-s) can be probed too.
    """
    den = (
        2.0 * s * t * (s * t + s + t - 1.0) * u
        - s * s * (s - 1.0) ** 2 * u * u
        - t * t * (t - 1.0) ** 2
    )
    x0 = s * t * ((2.0 * s * t + s * s - s) * u + (t * t - t)) / den
    y0 = s * t * ((2.0 * s * t + t * t - t) * u + (s * s - s) * u * u) / den
    return x0, y0


@dataclass
class TrapezoidPencil(_PencilBase):
    """t u x^2 + t y^2 - t(t-1) xy - t u x - t y = 0 through
    (0,0), (1,0), (0,1), (1,t)."""

    t: float
    kind = "trapezoid_u"

    def interval(self):
        return (0.25 * (self.t - 1.0) ** 2, math.inf)

    def raw_member(self, u) -> Conic:
        t = self.t
        return Conic(t * u, t, -0.5 * t * (t - 1.0), -t * u, -t, 0.0)

    def center(self, u):
        lo, hi = self.interval()
        _check_open(u, lo, hi)
        t = self.t
        den = 4.0 * u - (t - 1.0) ** 2
        return (2.0 * u + t - 1.0) / den, (1.0 + t) * u / den

    def axes_sq(self, u):
        lo, hi = self.interval()
        _check_open(u, lo, hi)
        t = self.t
        num = -2.0 * u * (u + t)
        den1 = (t - 1.0) ** 2 - 4.0 * u
        rad = math.hypot(t - 1.0, u - 1.0)
        a2 = num / (den1 * (u + 1.0 - rad))
        b2 = num / (den1 * (u + 1.0 + rad))
        return a2, b2


def _unit_line(p1, p2, interior):
    """Homogeneous line (nx, ny, c) through p1, p2 with unit gradient,
    positive at the interior point."""
    nx, ny = p2[1] - p1[1], p1[0] - p2[0]
    norm = math.hypot(nx, ny)
    nx, ny = nx / norm, ny / norm
    c = -(nx * p1[0] + ny * p1[1])
    if nx * interior[0] + ny * interior[1] + c < 0.0:
        nx, ny, c = -nx, -ny, -c
    return np.array([nx, ny, c])


@dataclass
class LinePairPencil(_PencilBase):
    """x * (l_OQ l_PR) + (l_OP l_QR) in the quadrilateral's own coordinates.

    Side-line functionals carry unit gradients and are positive on the
    interior, which makes the parameter reproducible.
    """

    quad: ConvexQuadrilateral
    kind = "line_pair"

    def __post_init__(self):
        pts = self.quad.points()
        interior = pts.mean(axis=0)
        # vertex roles (O, P, R, Q) = pts[0..3]; sides as line functionals
        l_op = _unit_line(pts[0], pts[1], interior)
        l_pr = _unit_line(pts[1], pts[2], interior)
        l_qr = _unit_line(pts[2], pts[3], interior)
        l_oq = _unit_line(pts[3], pts[0], interior)
        self._p_mat = 0.5 * (np.outer(l_oq, l_pr) + np.outer(l_pr, l_oq))
        self._q_mat = 0.5 * (np.outer(l_op, l_qr) + np.outer(l_qr, l_op))
        self._p_parallel = (
            abs(l_oq[0] * l_pr[1] - l_oq[1] * l_pr[0]) <= PARALLEL_TOL
        )

    def quadratic_part_polys(self):
        """Coefficient polynomials in the parameter for A, B, C (degree <= 1)."""
        p, q = self._p_mat, self._q_mat
        pa = np.array([q[0, 0], p[0, 0], 0.0])
        pb = np.array([q[1, 1], p[1, 1], 0.0])
        pc = np.array([q[0, 1], p[0, 1], 0.0])
        return pa, pb, pc

    def interval(self):
        p, q = self._p_mat, self._q_mat
        # g(x) = (A_p x + A_q)(B_p x + B_q) - (C_p x + C_q)^2 > 0
        alpha = p[0, 0] * p[1, 1] - p[0, 1] ** 2
        beta = p[0, 0] * q[1, 1] + p[1, 1] * q[0, 0] - 2.0 * p[0, 1] * q[0, 1]
        gamma = q[0, 0] * q[1, 1] - q[0, 1] ** 2
        if self._p_parallel:
            # parallel generator pair: g is linear in the parameter
            if beta <= 0.0:
                raise ParameterDomainError(math.nan, "empty ellipse range")
            return (-gamma / beta, math.inf)
        disc = beta * beta - 4.0 * alpha * gamma
        if alpha >= 0.0 or disc <= 0.0:
            raise ParameterDomainError(math.nan, "empty ellipse range")
        r1 = (-beta + math.sqrt(disc)) / (2.0 * alpha)
        r2 = (-beta - math.sqrt(disc)) / (2.0 * alpha)
        return (min(r1, r2), max(r1, r2))

    def raw_member(self, x) -> Conic:
        return Conic.from_matrix(x * self._p_mat + self._q_mat)
