import math

import numpy as np
import pytest

from quadellipse.conic import (
    AffineMap,
    Conic,
    ConicClass,
    area,
    classify,
    conic_from_geometry,
    conjugate_slope,
    ellipse_geometry,
    transform_conic,
)
from quadellipse.errors import ClassificationError, InputError


def test_constructor_rejects_bad_coefficients():
    with pytest.raises(InputError):
        Conic(math.nan, 1.0, 0.0, 0.0, 0.0, -1.0)
    with pytest.raises(InputError):
        Conic(0.0, 0.0, 0.0, 1.0, 1.0, -1.0)


def test_classification_taxonomy():
    assert classify(Conic(1, 1, 0, 0, 0, -1)) is ConicClass.ELLIPSE
    assert classify(Conic(1, -1, 0, 0, 0, -1)) is ConicClass.HYPERBOLA
    assert classify(Conic(1, 0, 0, 0, -1, 0)) is ConicClass.PARABOLA
    assert classify(Conic(1, 1, 0, 0, 0, 0)) is ConicClass.DEGENERATE_POINT
    assert classify(Conic(1, -1, 0, 0, 0, 0)) is ConicClass.DEGENERATE_LINES
    assert classify(Conic(1, 1, 0, 0, 0, 1)) is ConicClass.EMPTY


def test_normalized_is_scale_and_sign_invariant():
    c = Conic(2.0, 3.0, -1.0, 4.0, -5.0, -6.0)
    n1 = c.normalized()
    n2 = Conic(*(--7.5 * x for x in c.coefficients())).normalized()
    n3 = Conic(*(-0.25 * x for x in c.coefficients())).normalized()
    for field in "ABCDEF":
        assert getattr(n1, field) == pytest.approx(getattr(n2, field), abs=1e-15)
        assert getattr(n1, field) == pytest.approx(getattr(n3, field), abs=1e-15)
    assert max(abs(x) for x in n1.coefficients()) == 1.0
    assert n1.A + n1.B >= 0.0


def test_geometry_round_trip():
    rng = np.random.default_rng(1)
    for _ in range(200):
        geom = None
        cx, cy = rng.uniform(-4, 4, 2)
        a = rng.uniform(0.5, 4.0)
        b = rng.uniform(0.3, 1.0) * a
        phi = rng.uniform(0.0, math.pi)
        from quadellipse.conic import EllipseGeometry

        geom = EllipseGeometry(center=(cx, cy), a=a, b=b, phi=phi,
                               ecc=math.sqrt(1 - (b / a) ** 2))
        back = ellipse_geometry(conic_from_geometry(geom))
        assert back.a == pytest.approx(a, rel=1e-12)
        assert back.b == pytest.approx(b, rel=1e-12)
        assert back.center[0] == pytest.approx(cx, abs=1e-11)
        assert back.center[1] == pytest.approx(cy, abs=1e-11)
        if a - b > 1e-6 * a:  # angle is defined
            dphi = abs(back.phi - phi) % math.pi
            assert min(dphi, math.pi - dphi) < 1e-10


def test_ellipse_geometry_rejects_non_ellipses():
    with pytest.raises(ClassificationError):
        ellipse_geometry(Conic(1, -1, 0, 0, 0, -1))


def test_circle_geometry_convention():
    geom = ellipse_geometry(Conic(1, 1, 0, -2, -4, 1))
    assert geom.center == pytest.approx((1.0, 2.0))
    assert geom.a == pytest.approx(2.0)
    assert geom.ecc == pytest.approx(0.0, abs=1e-12)
    assert geom.phi == 0.0


def test_area():
    from quadellipse.conic import EllipseGeometry

    geom = EllipseGeometry(center=(0, 0), a=3.0, b=2.0, phi=0.3,
                           ecc=math.sqrt(1 - 4 / 9))
    assert area(geom) == pytest.approx(6.0 * math.pi)


def test_conjugate_slope_is_an_involution():
    conic = Conic(3.0, 2.0, 0.7, -1.0, 0.5, -4.0)
    for m in (-2.0, -0.5, 0.0, 0.3, 5.0):
        m2 = conjugate_slope(conic, m)
        assert conjugate_slope(conic, m2) == pytest.approx(m, rel=1e-12)
    # vertical direction pairs with slope -C/B
    assert conjugate_slope(conic, math.inf) == pytest.approx(-0.7 / 2.0)


def test_transform_conic_preserves_incidence():
    rng = np.random.default_rng(2)
    conic = Conic(1.0, 2.0, 0.3, -1.0, 0.4, -3.0)
    amap = AffineMap.create([[1.5, 0.2], [-0.4, 0.8]], [2.0, -1.0])
    image = transform_conic(conic, amap)
    for theta in rng.uniform(0, 2 * math.pi, 20):
        # walk the original locus by solving along rays from the center
        geom = ellipse_geometry(conic)
        x = geom.center[0] + geom.a * math.cos(theta) * math.cos(geom.phi) \
            - geom.b * math.sin(theta) * math.sin(geom.phi)
        y = geom.center[1] + geom.a * math.cos(theta) * math.sin(geom.phi) \
            + geom.b * math.sin(theta) * math.cos(geom.phi)
        assert abs(conic.evaluate(x, y)) < 1e-9
        xi, yi = amap.apply([x, y])
        assert abs(image.evaluate(xi, yi)) < 1e-9


def test_affine_map_helpers():
    amap = AffineMap.from_three_points(
        [(0, 0), (1, 0), (0, 1)], [(2, 1), (3, 1), (2, 3)]
    )
    assert amap.apply([0, 0]) == pytest.approx([2, 1])
    assert amap.apply([1, 1]) == pytest.approx([3, 3])
    inv = amap.inverse()
    assert inv.apply(amap.apply([0.3, -0.7])) == pytest.approx([0.3, -0.7])
    comp = amap.compose(inv)
    assert comp.apply([5.0, 6.0]) == pytest.approx([5.0, 6.0])
    with pytest.raises(InputError):
        AffineMap.from_three_points([(0, 0), (1, 1), (2, 2)], [(0, 0), (1, 0), (0, 1)])
    with pytest.raises(InputError):
        AffineMap.create([[1, 2], [2, 4]], [0, 0])
