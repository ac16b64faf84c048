"""Conic algebra in the A x^2 + B y^2 + 2C xy + D x + E y + F = 0 convention.

Note the cross-term convention: the xy coefficient of the polynomial is 2C.
All operations are pure functions of immutable values.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ClassificationError, InputError

# Relative tolerance for classification boundaries, applied to coefficients
# normalized to unit max magnitude.
CLASSIFY_TOL = 1e-12


class ConicClass(enum.Enum):
    ELLIPSE = "ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    DEGENERATE_POINT = "degenerate_point"
    DEGENERATE_LINES = "degenerate_lines"
    EMPTY = "empty"


@dataclass(frozen=True)
class Conic:
    A: float
    B: float
    C: float
    D: float
    E: float
    F: float

    def __post_init__(self):
        coeffs = (self.A, self.B, self.C, self.D, self.E, self.F)
        if not all(math.isfinite(c) for c in coeffs):
            raise InputError(f"non-finite conic coefficients {coeffs}")
        if self.A == 0.0 and self.B == 0.0 and self.C == 0.0:
            raise InputError("zero quadratic part")

    def coefficients(self):
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def normalized(self) -> "Conic":
        """Scale-canonical representative: unit max coefficient, A + B >= 0."""
        coeffs = np.array(self.coefficients())
        scale = np.max(np.abs(coeffs))
        coeffs = coeffs / scale
        tr = coeffs[0] + coeffs[1]
        if tr < 0.0 or (tr == 0.0 and _first_nonzero_sign(coeffs) < 0.0):
            coeffs = -coeffs
        return Conic(*coeffs)

    def evaluate(self, x, y):
        """Value of the quadratic polynomial at (x, y); zero on the locus."""
        return (
            self.A * x * x
            + self.B * y * y
            + 2.0 * self.C * x * y
            + self.D * x
            + self.E * y
            + self.F
        )

    def matrix(self) -> np.ndarray:
        """Symmetric 3x3 matrix Q with [x y 1] Q [x y 1]^T = polynomial."""
        return np.array(
            [
                [self.A, self.C, self.D / 2.0],
                [self.C, self.B, self.E / 2.0],
                [self.D / 2.0, self.E / 2.0, self.F],
            ]
        )

    @classmethod
    def from_matrix(cls, q: np.ndarray) -> "Conic":
        return cls(q[0, 0], q[1, 1], q[0, 1], 2.0 * q[0, 2], 2.0 * q[1, 2], q[2, 2])


def _first_nonzero_sign(coeffs):
    for c in coeffs:
        if c != 0.0:
            return math.copysign(1.0, c)
    return 1.0


@dataclass(frozen=True)
class EllipseGeometry:
    """Center, semi-axes a >= b, rotation phi in [0, pi) of the a-axis."""

    center: tuple
    a: float
    b: float
    phi: float
    ecc: float


@dataclass(frozen=True)
class AffineMap:
    """x |-> linear @ x + translation, with cached nonzero determinant."""

    linear: np.ndarray
    translation: np.ndarray
    det: float

    @classmethod
    def create(cls, linear, translation) -> "AffineMap":
        linear = np.asarray(linear, dtype=float)
        translation = np.asarray(translation, dtype=float)
        det = float(np.linalg.det(linear))
        if not math.isfinite(det) or det == 0.0:
            raise InputError("affine map must be invertible")
        return cls(linear, translation, det)

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls.create(np.eye(2), np.zeros(2))

    @classmethod
    def from_three_points(cls, src, dst) -> "AffineMap":
        """The unique affine map sending three source points to three targets."""
        src = np.asarray(src, dtype=float)
        dst = np.asarray(dst, dtype=float)
        m = np.column_stack([src, np.ones(3)])  # rows [x, y, 1]
        try:
            sol = np.linalg.solve(m, dst)  # rows of [L | t]^T
        except np.linalg.LinAlgError as exc:
            raise InputError("source points are collinear") from exc
        linear = sol[:2].T
        translation = sol[2]
        return cls.create(linear, translation)

    def apply(self, points):
        pts = np.asarray(points, dtype=float)
        return pts @ self.linear.T + self.translation

    def inverse(self) -> "AffineMap":
        inv = np.linalg.inv(self.linear)
        return AffineMap.create(inv, -inv @ self.translation)

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: (self.compose(other))(x) == self(other(x))."""
        return AffineMap.create(
            self.linear @ other.linear,
            self.linear @ other.translation + self.translation,
        )


def _signed_invariants(conic: Conic):
    """Normalized coefficients with A + B >= 0, plus AB - C^2 and the
    Lemma-style nondegeneracy quantity A E^2 + B D^2 + 4F C^2 - 2CDE - 4ABF."""
    a, b, c, d, e, f = conic.normalized().coefficients()
    q = a * b - c * c
    delta = (
        a * e * e + b * d * d + 4.0 * f * c * c - 2.0 * c * d * e - 4.0 * a * b * f
    )
    return (a, b, c, d, e, f), q, delta


def classify(conic: Conic) -> ConicClass:
    _, q, delta = _signed_invariants(conic)
    if q > CLASSIFY_TOL:
        if abs(delta) <= CLASSIFY_TOL:
            return ConicClass.DEGENERATE_POINT
        # With A + B > 0 normalization the real-ellipse condition is delta > 0.
        return ConicClass.ELLIPSE if delta > 0.0 else ConicClass.EMPTY
    if q < -CLASSIFY_TOL:
        if abs(delta) <= CLASSIFY_TOL:
            return ConicClass.DEGENERATE_LINES
        return ConicClass.HYPERBOLA
    if abs(delta) <= CLASSIFY_TOL:
        return ConicClass.DEGENERATE_LINES
    return ConicClass.PARABOLA


def ellipse_geometry(conic: Conic) -> EllipseGeometry:
    tag = classify(conic)
    if tag is not ConicClass.ELLIPSE:
        raise ClassificationError(tag, "ellipse geometry requires an ellipse")
    (a_, b_, c_, d_, e_, _), q, delta = _signed_invariants(conic)

    spread = math.hypot(b_ - a_, 2.0 * c_)
    a2 = delta / (2.0 * q * ((a_ + b_) - spread))
    b2 = delta / (2.0 * q * ((a_ + b_) + spread))
    x0 = -0.5 * (b_ * d_ - c_ * e_) / q
    y0 = 0.5 * (c_ * d_ - a_ * e_) / q

    phi = _major_axis_angle(a_, b_, c_, spread)
    ecc = math.sqrt(max(0.0, 1.0 - b2 / a2))
    return EllipseGeometry(
        center=(x0, y0), a=math.sqrt(a2), b=math.sqrt(b2), phi=phi, ecc=ecc
    )


def _major_axis_angle(a, b, c, spread):
    """Rotation of the major axis in [0, pi); 0 for circles by convention."""
    scale = max(abs(a), abs(b), abs(c))
    if spread <= CLASSIFY_TOL * scale:  # circle
        return 0.0
    if abs(c) <= CLASSIFY_TOL * scale:  # axis-aligned
        return 0.0 if a < b else math.pi / 2.0
    # Acute half-arccotangent branch, then attach to the smaller eigenvalue
    # (the major axis carries the smaller quadratic-form coefficient).
    two_phi = math.atan2(2.0 * c, a - b)
    if two_phi <= 0.0:
        two_phi += math.pi
    phi0 = 0.5 * two_phi
    lam = (
        a * math.cos(phi0) ** 2
        + 2.0 * c * math.sin(phi0) * math.cos(phi0)
        + b * math.sin(phi0) ** 2
    )
    lam_min = ((a + b) - spread) / 2.0
    lam_max = ((a + b) + spread) / 2.0
    if abs(lam - lam_min) <= abs(lam - lam_max):
        phi = phi0
    else:
        phi = phi0 + math.pi / 2.0
    return phi % math.pi


def conic_from_geometry(geom: EllipseGeometry) -> Conic:
    """Rebuild coefficients from center, axes and rotation (F scaled to -1 form)."""
    cos, sin = math.cos(geom.phi), math.sin(geom.phi)
    ia, ib = 1.0 / geom.a**2, 1.0 / geom.b**2
    a = cos * cos * ia + sin * sin * ib
    b = sin * sin * ia + cos * cos * ib
    c = cos * sin * (ia - ib)
    x0, y0 = geom.center
    d = -2.0 * a * x0 - 2.0 * c * y0
    e = -2.0 * b * y0 - 2.0 * c * x0
    f = a * x0 * x0 + b * y0 * y0 + 2.0 * c * x0 * y0 - 1.0
    return Conic(a, b, c, d, e, f)


def area(geom: EllipseGeometry) -> float:
    return math.pi * geom.a * geom.b


def transform_conic(conic: Conic, amap: AffineMap) -> Conic:
    """Conic whose zero set is the image of the input's zero set under amap."""
    if amap.det == 0.0:
        raise InputError("singular affine map")
    m = np.eye(3)
    m[:2, :2] = amap.linear
    m[:2, 2] = amap.translation
    minv = np.linalg.inv(m)
    q = minv.T @ conic.matrix() @ minv
    return Conic.from_matrix(q)


def conjugate_slope(conic: Conic, m: float) -> float:
    """The unique slope m' with A + C(m + m') + B m m' = 0.

    Vertical directions use math.inf; the relation is a projective involution.
    """
    tag = classify(conic)
    if tag is not ConicClass.ELLIPSE:
        raise ClassificationError(tag, "conjugate directions require an ellipse")
    a, b, c = conic.A, conic.B, conic.C
    if math.isinf(m):
        # direction (0, 1): C vx + B vy = 0
        return -c / b
    num = -(a + c * m)
    den = c + b * m
    if den == 0.0:
        return math.inf
    return num / den
