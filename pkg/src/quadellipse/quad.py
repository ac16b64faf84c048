"""Convex quadrilaterals: validation, shape classes, canonical coordinates,
diagonal-midpoint segment, cyclic/tangential tests and the right-angle frame."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .conic import AffineMap
from .errors import (
    FrameUnavailableError,
    InputError,
    UnsupportedShapeError,
    ValidationError,
)

PARALLEL_TOL = 1e-10
CYCLIC_TOL = 1e-9
TANGENTIAL_TOL = 1e-9
RIGHT_ANGLE_TOL = 1e-9  # radians


class QuadShape(enum.Enum):
    GENERAL = "general"
    TRAPEZOID = "trapezoid"
    PARALLELOGRAM = "parallelogram"


@dataclass(frozen=True)
class ConvexQuadrilateral:
    vertices: tuple  # four (x, y) tuples, counterclockwise
    shape: QuadShape

    def points(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float)

    def edges(self) -> np.ndarray:
        pts = self.points()
        return np.roll(pts, -1, axis=0) - pts

    def side_lengths(self) -> np.ndarray:
        return np.linalg.norm(self.edges(), axis=1)

    def diagonal_midpoints(self):
        pts = self.points()
        return 0.5 * (pts[0] + pts[2]), 0.5 * (pts[1] + pts[3])


@dataclass(frozen=True)
class CanonicalQuad:
    """Affine image with three vertices at (0,0), (1,0), (0,1).

    kind "general": fourth vertex at (s, t) with s + t > 1, s != 1 != t.
    kind "trapezoid": fourth vertex at (1, t), t > 0, t != 1 (s is exactly 1).
    `map` carries the original quadrilateral onto the canonical vertex set.
    """

    kind: str
    s: float
    t: float
    map: AffineMap


@dataclass(frozen=True)
class SteinerFrame:
    """Right-angle-at-O configuration: O at the origin, P = (p, 0), Q = (0, q),
    H = (h, 0) and K = (0, k) are where the far sides meet the axes."""

    h: float
    k: float
    p: float
    q: float
    isometry: AffineMap  # original coordinates -> frame coordinates


@dataclass(frozen=True)
class SegmentZ:
    """Open segment joining the two diagonal midpoints."""

    endpoints: tuple  # two (x, y) tuples

    def is_degenerate(self) -> bool:
        (x1, y1), (x2, y2) = self.endpoints
        return math.hypot(x2 - x1, y2 - y1) == 0.0

    def distance_to(self, point) -> float:
        """Euclidean distance from a point to the closed segment."""
        p = np.asarray(point, dtype=float)
        a = np.asarray(self.endpoints[0])
        b = np.asarray(self.endpoints[1])
        ab = b - a
        denom = float(ab @ ab)
        if denom == 0.0:
            return float(np.linalg.norm(p - a))
        u = float((p - a) @ ab) / denom
        u = min(1.0, max(0.0, u))
        return float(np.linalg.norm(p - (a + u * ab)))


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def validate(points) -> ConvexQuadrilateral:
    pts = np.asarray(points, dtype=float)
    if pts.shape != (4, 2):
        raise ValidationError("arity", "expected exactly four 2-D points")
    if not np.all(np.isfinite(pts)):
        raise ValidationError("finite", "vertex coordinates must be finite")

    area2 = sum(
        _cross(pts[i], pts[(i + 1) % 4]) for i in range(4)
    )
    if area2 < 0.0:
        pts = pts[::-1]
    scale2 = float(np.max(np.abs(pts)) ** 2 + 1.0)
    edges = np.roll(pts, -1, axis=0) - pts
    for i in range(4):
        c = _cross(edges[i], edges[(i + 1) % 4])
        if c <= 1e-12 * scale2:
            if abs(c) <= 1e-12 * scale2:
                raise ValidationError("collinear", f"three vertices nearly collinear at corner {i}")
            raise ValidationError("convex", "vertices do not form a strictly convex quadrilateral")

    lengths = np.linalg.norm(edges, axis=1)
    parallel_pairs = 0
    for i in (0, 1):
        if abs(_cross(edges[i], edges[i + 2])) <= PARALLEL_TOL * lengths[i] * lengths[i + 2]:
            parallel_pairs += 1
    shape = (QuadShape.GENERAL, QuadShape.TRAPEZOID, QuadShape.PARALLELOGRAM)[parallel_pairs]
    vertices = tuple((float(x), float(y)) for x, y in pts)
    return ConvexQuadrilateral(vertices=vertices, shape=shape)


def _labelings(quad: ConvexQuadrilateral):
    """All 8 (O, P, R, Q) role assignments: 4 rotations x 2 orientations."""
    pts = quad.points()
    for rev in (pts, pts[::-1]):
        for rot in range(4):
            yield np.roll(rev, -rot, axis=0)


def canonicalize(quad: ConvexQuadrilateral) -> CanonicalQuad:
    """Affine map sending vertex roles (O, P, Q) to (0,0), (1,0), (0,1).

    The fourth vertex R lands at (s, t); role selection picks the
    lexicographically smallest admissible (s, t).
    """
    if quad.shape is QuadShape.PARALLELOGRAM:
        raise UnsupportedShapeError("parallelograms have no canonical (s, t) form")

    target = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    best = None
    for seq in _labelings(quad):
        o, p, r, q = seq
        if quad.shape is QuadShape.TRAPEZOID:
            # the parallel pair must map onto the vertical sides PR and QO
            e_pr, e_qo = r - p, o - q
            if abs(_cross(e_pr, e_qo)) > PARALLEL_TOL * np.linalg.norm(e_pr) * np.linalg.norm(e_qo):
                continue
        amap = AffineMap.from_three_points([o, p, q], target)
        s, t = amap.apply(r)
        if s <= 0.0 or t <= 0.0 or s + t <= 1.0:
            continue
        if quad.shape is QuadShape.TRAPEZOID:
            if abs(t - 1.0) < 1e-12:
                continue
            key = (1.0, t)
            cand = CanonicalQuad(kind="trapezoid", s=1.0, t=float(t), map=amap)
        else:
            key = (s, t)
            cand = CanonicalQuad(kind="general", s=float(s), t=float(t), map=amap)
        if best is None or key < best[0]:
            best = (key, cand)
    if best is None:
        raise ValidationError("canonical", "no admissible vertex labeling found")
    return best[1]


def canonical_vertices(canon: CanonicalQuad) -> np.ndarray:
    """Vertex set of the canonical quadrilateral, in (O, P, R, Q) order."""
    return np.array(
        [[0.0, 0.0], [1.0, 0.0], [canon.s, canon.t], [0.0, 1.0]]
    )


def diagonal_segment(quad: ConvexQuadrilateral) -> SegmentZ:
    m1, m2 = quad.diagonal_midpoints()
    return SegmentZ(endpoints=(tuple(m1), tuple(m2)))


def _circumcircle(a, b, c):
    """Center and radius of the circle through three points."""
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        raise InputError("collinear points have no circumcircle")
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return (ux, uy), math.hypot(ax - ux, ay - uy)


def is_cyclic(quad: ConvexQuadrilateral, tol=CYCLIC_TOL) -> bool:
    pts = quad.points()
    center, radius = _circumcircle(pts[0], pts[1], pts[2])
    d = math.hypot(pts[3][0] - center[0], pts[3][1] - center[1])
    return bool(abs(d - radius) <= tol * radius)


def is_tangential(quad: ConvexQuadrilateral, tol=TANGENTIAL_TOL) -> bool:
    s = quad.side_lengths()
    return bool(abs((s[0] + s[2]) - (s[1] + s[3])) <= tol * float(np.sum(s)))


def circumcircle(quad: ConvexQuadrilateral):
    """Center and radius of the circle through the first three vertices."""
    pts = quad.points()
    return _circumcircle(pts[0], pts[1], pts[2])


def incircle(quad: ConvexQuadrilateral):
    """Center and radius of the inscribed circle of a tangential quadrilateral.

    The center is the intersection of the interior angle bisectors at two
    adjacent vertices; the radius is its distance to a side."""
    pts = quad.points()

    def bisector(i):
        u = pts[(i + 1) % 4] - pts[i]
        w = pts[(i - 1) % 4] - pts[i]
        return u / np.linalg.norm(u) + w / np.linalg.norm(w)

    d0, d1 = bisector(0), bisector(1)
    mat = np.column_stack([d0, -d1])
    try:
        coef = np.linalg.solve(mat, pts[1] - pts[0])
    except np.linalg.LinAlgError as exc:
        raise InputError("angle bisectors do not intersect") from exc
    center = pts[0] + coef[0] * d0
    edge = pts[1] - pts[0]
    n = np.array([-edge[1], edge[0]]) / np.linalg.norm(edge)
    radius = abs(float(n @ (center - pts[0])))
    return (float(center[0]), float(center[1])), radius


def is_bicentric(quad: ConvexQuadrilateral) -> bool:
    return is_cyclic(quad) and is_tangential(quad)


def quad_from_frame_parameters(h, k, p, q) -> ConvexQuadrilateral:
    """Vertex set O=(0,0), P=(p,0), R, Q=(0,q) realizing frame data
    0 < p < h, 0 < q < k with kh - pq > 0; R is where the far sides meet."""
    if not (0.0 < p < h and 0.0 < q < k and k * h - p * q > 0.0):
        raise InputError(f"invalid frame parameters h={h}, k={k}, p={p}, q={q}")
    det = k * h - p * q
    r = (p * h * (k - q) / det, k * q * (h - p) / det)
    return validate([(0.0, 0.0), (p, 0.0), r, (0.0, q)])


def match_canonical_right_trapezoid(quad: ConvexQuadrilateral, tol=1e-9):
    """Isometry (reflections allowed) onto (0,0), (1,0), (1,t), (0,1).

    Returns (t, map original -> canonical), or None if the quadrilateral is
    not congruent to the canonical right trapezoid. Eccentricity is not
    affine-invariant, so the trapezoid closed forms demand literal congruence.
    """
    if quad.shape is not QuadShape.TRAPEZOID:
        return None
    for seq in _labelings(quad):
        w0, w1, w2, w3 = seq
        base = w1 - w0
        blen = float(np.linalg.norm(base))
        if abs(blen - 1.0) > tol:
            continue
        ex, ey = base / blen
        for rot in (
            np.array([[ex, ey], [-ey, ex]]),
            np.array([[ex, ey], [ey, -ex]]),
        ):
            amap = AffineMap.create(rot, -rot @ w0)
            g3 = amap.apply(w3)
            g2 = amap.apply(w2)
            if abs(g3[0]) > tol or abs(g3[1] - 1.0) > tol:
                continue
            if abs(g2[0] - 1.0) > tol:
                continue
            t = float(g2[1])
            if t <= 0.0 or abs(t - 1.0) < 1e-7:
                continue
            return t, amap
    return None


def steiner_frame(quad: ConvexQuadrilateral) -> SteinerFrame:
    """Rigid frame with the right-angle vertex at the origin.

    Requires shape GENERAL and an interior angle of pi/2 (within 1e-9 rad)
    at some vertex, which becomes O; the adjacent vertices become P and Q.
    """
    if quad.shape is not QuadShape.GENERAL:
        raise UnsupportedShapeError(
            "frame requires a general quadrilateral (H or K would be at infinity)"
        )
    pts = quad.points()
    corner = None
    for i in range(4):
        u = pts[(i + 1) % 4] - pts[i]
        w = pts[(i - 1) % 4] - pts[i]
        cosang = float(u @ w) / (np.linalg.norm(u) * np.linalg.norm(w))
        if abs(cosang) <= RIGHT_ANGLE_TOL:
            corner = i
            break
    if corner is None:
        raise FrameUnavailableError("no vertex with interior angle pi/2 within 1e-9")

    o = pts[corner]
    p_pt = pts[(corner + 1) % 4]
    r_pt = pts[(corner + 2) % 4]
    q_pt = pts[(corner + 3) % 4]
    e1 = (p_pt - o) / np.linalg.norm(p_pt - o)
    rot = np.array([[e1[0], e1[1]], [-e1[1], e1[0]]])
    isometry = AffineMap.create(rot, -rot @ o)

    p = float(np.linalg.norm(p_pt - o))
    q = float(np.linalg.norm(q_pt - o))
    rf = isometry.apply(r_pt)
    qf = isometry.apply(q_pt)
    # H: line QR meets the x axis; K: line PR meets the y axis
    if abs(rf[1] - qf[1]) < 1e-300 or abs(rf[0] - p) < 1e-300:
        raise FrameUnavailableError("far side parallel to an axis")
    h = float(qf[0] + (rf[0] - qf[0]) * (-qf[1]) / (rf[1] - qf[1]))
    k = float(rf[1] * (0.0 - p) / (rf[0] - p))
    if not (0.0 < p < h and 0.0 < q < k and k * h - p * q > 0.0):
        raise FrameUnavailableError(
            f"frame constraints violated: p={p}, h={h}, q={q}, k={k}"
        )
    return SteinerFrame(h=h, k=k, p=p, q=q, isometry=isometry)
