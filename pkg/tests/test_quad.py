import math

import numpy as np
import pytest

from quadellipse.errors import (
    FrameUnavailableError,
    UnsupportedShapeError,
    ValidationError,
)
from quadellipse.quad import (
    QuadShape,
    canonical_vertices,
    canonicalize,
    circumcircle,
    diagonal_segment,
    incircle,
    is_bicentric,
    is_cyclic,
    is_tangential,
    match_canonical_right_trapezoid,
    quad_from_frame_parameters,
    steiner_frame,
    validate,
)


def test_validate_rejects_bad_input():
    with pytest.raises(ValidationError):
        validate([(0, 0), (1, 0), (1, 1)])
    with pytest.raises(ValidationError):
        validate([(0, 0), (1, 0), (1, 1), (0, math.nan)])
    with pytest.raises(ValidationError):
        validate([(0, 0), (1, 0), (2, 0), (0, 1)])  # collinear corner
    with pytest.raises(ValidationError):
        validate([(0, 0), (2, 0), (1, 0.2), (0, 2)])  # reflex vertex


def test_validate_accepts_clockwise_and_reorients():
    quad = validate([(0, 1), (2, 2), (1, 0), (0, 0)])
    pts = quad.points()
    area2 = sum(
        pts[i][0] * pts[(i + 1) % 4][1] - pts[i][1] * pts[(i + 1) % 4][0]
        for i in range(4)
    )
    assert area2 > 0.0


def test_shape_classification():
    assert validate([(0, 0), (1, 0), (2, 2), (0, 1)]).shape is QuadShape.GENERAL
    assert validate([(0, 0), (1, 0), (1, 2), (0, 1)]).shape is QuadShape.TRAPEZOID
    assert validate([(0, 0), (1, 0), (1.5, 1), (0.5, 1)]).shape is QuadShape.PARALLELOGRAM


def test_canonicalize_general():
    quad = validate([(0.5, -0.2), (2.1, 0.3), (1.8, 2.2), (-0.4, 1.6)])
    canon = canonicalize(quad)
    assert canon.kind == "general"
    assert canon.s + canon.t > 1.0
    mapped = canon.map.apply(quad.points())
    target = canonical_vertices(canon)
    # vertex set equality up to the relabeling chosen by canonicalization
    found = sorted(tuple(np.round(v, 9)) for v in mapped)
    want = sorted(tuple(np.round(v, 9)) for v in target)
    assert found == want


def test_canonicalize_trapezoid_and_parallelogram():
    quad = validate([(1, 1), (3, 1), (3, 4), (1, 2)])
    canon = canonicalize(quad)
    assert canon.kind == "trapezoid"
    assert canon.s == 1.0
    assert canon.t != 1.0
    with pytest.raises(UnsupportedShapeError):
        canonicalize(validate([(0, 0), (1, 0), (1.5, 1), (0.5, 1)]))


def test_diagonal_segment():
    quad = validate([(0, 0), (2, 0), (2, 2), (0, 2)])
    seg = diagonal_segment(quad)
    assert seg.is_degenerate()  # parallelogram: midpoints coincide
    quad2 = validate([(0, 0), (1, 0), (3, 3), (0, 1)])
    seg2 = diagonal_segment(quad2)
    assert not seg2.is_degenerate()
    assert seg2.distance_to(seg2.endpoints[0]) == 0.0
    assert seg2.distance_to((10.0, 0.0)) > 1.0


def test_cyclic_and_tangential_predicates():
    cyclic = validate([(1, 0), (0, 1), (-1, 0), (0.6, -0.8)])
    assert is_cyclic(cyclic)
    center, radius = circumcircle(cyclic)
    assert center == pytest.approx((0.0, 0.0), abs=1e-12)
    assert radius == pytest.approx(1.0)

    tangential = validate([(0, 0), (1, 0), (2, 2), (0, 1)])
    assert is_tangential(tangential)
    center, radius = incircle(tangential)
    pts = tangential.points()
    for i in range(4):
        p1, p2 = pts[i], pts[(i + 1) % 4]
        e = p2 - p1
        n = np.array([-e[1], e[0]]) / np.linalg.norm(e)
        assert abs(abs(float(n @ (np.array(center) - p1))) - radius) < 1e-12

    square_like = validate([(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert is_bicentric(square_like)
    assert not is_cyclic(validate([(0, 0), (3, 0), (3.2, 1), (0, 1)]))
    assert not is_tangential(validate([(0, 0), (3, 0), (3.2, 1), (0, 1)]))


def test_frame_round_trip():
    h, k, p, q = 4.0, 5.0, 3.0, 2.0
    quad = quad_from_frame_parameters(h, k, p, q)
    frame = steiner_frame(quad)
    assert frame.h == pytest.approx(h)
    assert frame.k == pytest.approx(k)
    assert frame.p == pytest.approx(p)
    assert frame.q == pytest.approx(q)
    # frame coordinates place the right-angle corner at the origin
    mapped = frame.isometry.apply(quad.points())
    assert mapped[0] == pytest.approx([0.0, 0.0], abs=1e-12)
    assert mapped[1] == pytest.approx([p, 0.0], abs=1e-12)
    assert mapped[3] == pytest.approx([0.0, q], abs=1e-12)


def test_frame_survives_rigid_motion():
    quad = quad_from_frame_parameters(4.0, 5.0, 3.0, 2.0)
    c, s = math.cos(0.7), math.sin(0.7)
    rot = np.array([[c, -s], [s, c]])
    moved = validate(quad.points() @ rot.T + np.array([3.0, -2.0]))
    frame = steiner_frame(moved)
    assert frame.h == pytest.approx(4.0)
    assert frame.q == pytest.approx(2.0)


def test_frame_unavailable():
    with pytest.raises(FrameUnavailableError):
        steiner_frame(validate([(0, 0), (1, 0.2), (2, 2), (-0.3, 1)]))
    with pytest.raises(UnsupportedShapeError):
        steiner_frame(validate([(0, 0), (1, 0), (1, 2), (0, 1)]))


def test_match_canonical_right_trapezoid():
    t = 1.7
    base = validate([(0, 0), (1, 0), (1, t), (0, 1)])
    c, s = math.cos(1.1), math.sin(1.1)
    rot = np.array([[c, -s], [s, c]])
    moved = validate(base.points() @ rot.T + np.array([-2.0, 5.0]))
    matched = match_canonical_right_trapezoid(moved)
    assert matched is not None
    t_found, amap = matched
    assert t_found == pytest.approx(t, abs=1e-9)
    imgs = sorted(tuple(np.round(v, 8)) for v in amap.apply(moved.points()))
    assert imgs == sorted([(0.0, 0.0), (1.0, 0.0), (1.0, t), (0.0, 1.0)])
    # scaled copies are not congruent
    scaled = validate(2.0 * base.points())
    assert match_canonical_right_trapezoid(scaled) is None
    # non-trapezoids never match
    assert match_canonical_right_trapezoid(validate([(0, 0), (1, 0), (2, 2), (0, 1)])) is None
