import numpy as np
import pytest

from quadellipse import random_convex_quad
from quadellipse.conic import area as ellipse_area
from quadellipse.conic import ellipse_geometry
from quadellipse.errors import InputError, UnsupportedShapeError
from quadellipse.min_area import gamma_root, min_area_circumscribed, objective
from quadellipse.pencil import CanonicalPencil, LinePairPencil
from quadellipse.quad import validate


def test_objective_rejects_bad_parameters():
    with pytest.raises(InputError):
        objective(1.0, 2.0)
    with pytest.raises(InputError):
        objective(0.3, 0.3)


def test_gamma_root_properties():
    rng = np.random.default_rng(4)
    for _ in range(50):
        s = rng.uniform(0.3, 3.0)
        t = rng.uniform(0.3, 3.0)
        if abs(s - 1.0) < 0.02 or abs(t - 1.0) < 0.02 or s + t < 1.05:
            continue
        obj = objective(s, t)
        u = gamma_root(obj)
        lo, hi = obj.interval
        assert lo < u < hi
        assert abs(obj.gamma(u)) < 1e-8 * max(1.0, abs(obj.gamma_prime(u)))
        # the root minimizes the squared-area expression
        for probe in (max(lo + 0.5 * (u - lo), 0.99 * u), min(hi - 0.5 * (hi - u), 1.01 * u)):
            assert obj.beta(probe) >= obj.beta(u) * (1.0 - 1e-12)


def test_symmetric_case_pins_u_equal_one():
    for s in (0.7, 1.6, 2.5):
        assert gamma_root(objective(s, s)) == pytest.approx(1.0, abs=1e-12)


def test_beta_matches_member_axes():
    s, t = 2.0, 3.0
    obj = objective(s, t)
    pencil = CanonicalPencil(s, t)
    for u in pencil.grid(7):
        a2, b2 = pencil.axes_sq(float(u))
        assert obj.beta(float(u)) == pytest.approx(a2 * b2, rel=1e-9)


def test_min_area_minimizes_over_the_pencil():
    rng = np.random.default_rng(5)
    for _ in range(15):
        quad = random_convex_quad(rng)
        conic, geom, best_area, diag = min_area_circumscribed(quad)
        assert diag.path == "gamma_cubic"
        assert best_area == pytest.approx(ellipse_area(geom), rel=1e-12)
        for x, y in quad.vertices:
            assert abs(conic.evaluate(x, y)) < 1e-8
        pencil = LinePairPencil(quad)
        for x in pencil.grid(200):
            other = ellipse_area(ellipse_geometry(pencil.member(float(x))))
            assert best_area <= other * (1.0 + 1e-9)


def test_trapezoid_extension_path():
    quad = validate([(0, 0), (2, 0), (2, 3), (0, 1)])
    conic, geom, best_area, diag = min_area_circumscribed(quad)
    assert diag.path == "numeric_extension"
    for x, y in quad.vertices:
        assert abs(conic.evaluate(x, y)) < 1e-8
    pencil = LinePairPencil(quad)
    for x in pencil.grid(300):
        other = ellipse_area(ellipse_geometry(pencil.member(float(x))))
        assert best_area <= other * (1.0 + 1e-7)


def test_parallelogram_unsupported():
    with pytest.raises(UnsupportedShapeError):
        min_area_circumscribed(validate([(0, 0), (1, 0), (1.5, 1), (0.5, 1)]))
