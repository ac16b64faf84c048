"""The unique minimal-area circumscribed ellipse.

Area ratios are affine-invariant, so the general case is solved in canonical
(s, t) coordinates: the squared-area objective's derivative sign is carried by
a convex cubic, whose single root in the ellipse interval is isolated by
bisection and polished by Newton. Trapezoids are handled by direct numeric
minimization (labelled an extension in the diagnostics: uniqueness for the
trapezoid case is not established by the closed-form argument).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .conic import area as ellipse_area
from .conic import ellipse_geometry, transform_conic
from .errors import InputError, NumericError, UnsupportedShapeError
from .min_ecc import Diagnostics
from .optimize import bisect_root, golden_min, newton_polish
from .pencil import CanonicalPencil, TrapezoidPencil, compactify
from .quad import ConvexQuadrilateral, QuadShape, canonicalize

AREA_SELF_CHECK_REL = 1e-8


@dataclass(frozen=True)
class AreaObjective:
    """Canonical-coordinate squared-area machinery for one (s, t)."""

    s: float
    t: float
    interval: tuple

    def alpha(self, u):
        s, t = self.s, self.t
        return (
            s * s * (s - 1.0) ** 2 * u * u
            - 2.0 * s * t * (s * t + s + t - 1.0) * u
            + t * t * (t - 1.0) ** 2
        )

    def beta(self, u):
        """a^2 b^2 of the canonical member at u."""
        s, t = self.s, self.t
        num = (
            4.0
            * u
            * u
            * (s * u + t) ** 2
            * (s * t) ** 2
            * (s * t * (s + t - 1.0)) ** 2
        )
        return -num / self.alpha(u) ** 3

    def gamma(self, u):
        s, t = self.s, self.t
        return (
            s**3 * (s - 1.0) ** 2 * u**3
            + s * s * t * (2.0 * s * s - 3.0 * s + s * t + 1.0 + t) * u * u
            - s * t * t * (2.0 * t * t + s * t - 3.0 * t + s + 1.0) * u
            - t**3 * (t - 1.0) ** 2
        )

    def gamma_prime(self, u):
        s, t = self.s, self.t
        return (
            3.0 * s**3 * (s - 1.0) ** 2 * u * u
            + 2.0 * s * s * t * (2.0 * s * s - 3.0 * s + s * t + 1.0 + t) * u
            - s * t * t * (2.0 * t * t + s * t - 3.0 * t + s + 1.0)
        )

    def gamma_second(self, u):
        s, t = self.s, self.t
        return 6.0 * s**3 * (s - 1.0) ** 2 * u + 2.0 * s * s * t * self.d()

    def d(self):
        """Convexity certificate 2s^2 + st - 3s + t + 1, nonnegative on the
        admissible (s, t) region."""
        s, t = self.s, self.t
        return 2.0 * s * s + s * t - 3.0 * s + t + 1.0


def objective(s, t) -> AreaObjective:
    if not (s > 0.0 and t > 0.0 and s + t > 1.0 and s != 1.0 and t != 1.0):
        raise InputError(f"(s, t) = ({s}, {t}) violates s+t>1, s != 1 != t")
    return AreaObjective(s=s, t=t, interval=CanonicalPencil(s, t).interval())


def gamma_root(obj: AreaObjective) -> float:
    """The single zero of the cubic inside the ellipse interval.

    The squared-area derivative changes sign - to + there; bracketed by
    bisection (the cubic is negative near the left endpoint and positive near
    the right one), then Newton-polished.
    """
    lo, hi = obj.interval
    width = hi - lo
    a = lo + 1e-12 * width
    b = hi - 1e-12 * width
    if obj.gamma(a) >= 0.0 or obj.gamma(b) <= 0.0:
        # cannot occur for admissible (s, t); guarded regardless
        grid = [lo + (i / 64.0) * width for i in range(1, 64)]
        signs = [obj.gamma(u) for u in grid]
        bracket = None
        for u1, u2, g1, g2 in zip(grid, grid[1:], signs, signs[1:]):
            if (g1 < 0.0) and (g2 >= 0.0):
                bracket = (u1, u2)
                break
        if bracket is None:
            raise NumericError("no sign change of the area cubic in the interval")
        a, b = bracket
    u = bisect_root(obj.gamma, a, b)
    u = newton_polish(obj.gamma, obj.gamma_prime, u)
    return u


def _trapezoid_area_sq(t, u):
    """a^2 b^2 of the canonical trapezoid member: 4u^2(u+t)^2/(4u-(t-1)^2)^3."""
    den = 4.0 * u - (t - 1.0) ** 2
    return 4.0 * u * u * (u + t) ** 2 / den**3


def min_area_circumscribed(quad: ConvexQuadrilateral):
    """Returns (conic, geometry, area, diagnostics) in original coordinates."""
    if quad.shape is QuadShape.PARALLELOGRAM:
        raise UnsupportedShapeError("no extremal circumscribed ellipse machinery for parallelograms")

    canon = canonicalize(quad)
    back = canon.map.inverse()
    if canon.kind == "general":
        obj = objective(canon.s, canon.t)
        u_star = gamma_root(obj)
        pencil = CanonicalPencil(canon.s, canon.t)
        member = pencil.member(u_star)
        diag = Diagnostics(
            path="gamma_cubic",
            iterations=0,
            residuals={"gamma": obj.gamma(u_star), "u_star": u_star},
        )
    else:
        t = canon.t
        pencil = TrapezoidPencil(t)
        lo, _ = pencil.interval()
        l0, u_of_l = compactify(lo)
        n = 1024
        step = (1.0 - l0) / (n + 1)
        ls = [l0 + (j + 1) * step for j in range(n)]
        j_best = min(range(n), key=lambda j: _trapezoid_area_sq(t, u_of_l(ls[j])))
        l_opt, _, iters = golden_min(
            lambda l: _trapezoid_area_sq(t, u_of_l(l)),
            max(l0, ls[j_best] - step),
            min(1.0 - 1e-15, ls[j_best] + step),
        )
        u_star = u_of_l(l_opt)
        member = pencil.member(u_star)
        diag = Diagnostics(
            path="numeric_extension",
            iterations=iters,
            residuals={
                "u_star": u_star,
                "note": "trapezoid case: uniqueness not covered by the cubic argument",
            },
        )

    conic = transform_conic(member, back)
    geom = ellipse_geometry(conic)
    result_area = ellipse_area(geom)
    canonical_area = ellipse_area(ellipse_geometry(member))
    expected = canonical_area * abs(back.det)
    if abs(result_area - expected) > AREA_SELF_CHECK_REL * expected:
        raise NumericError(
            f"area transport self-check failed: {result_area} vs {expected}"
        )
    return conic, geom, result_area, diag
