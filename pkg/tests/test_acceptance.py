"""Acceptance gate: ten end-to-end criteria, one printed pass line each."""

import math
import time

import numpy as np
import pytest

import quadellipse as qe
from quadellipse.conic import AffineMap, conic_from_geometry, transform_conic
from quadellipse.kernels import scan_axis_ratio, scan_beta
from quadellipse.min_area import gamma_root, objective
from quadellipse.min_ecc import maximize_pencil_axis_ratio
from quadellipse.pencil import CanonicalPencil, FramePencil, canonical_center
from quadellipse.quad import SteinerFrame


def _report(number, name):
    print(f"ACCEPTANCE {number:2d} PASS: {name}")


def _random_frame(rng):
    h = rng.uniform(1.0, 10.0)
    k = rng.uniform(1.0, 10.0)
    p = rng.uniform(0.1, 0.95) * h
    q = rng.uniform(0.1, 0.95) * k
    return SteinerFrame(h=h, k=k, p=p, q=q, isometry=AffineMap.identity())


def _random_st(rng):
    while True:
        s = rng.uniform(0.3, 3.0)
        t = rng.uniform(0.3, 3.0)
        if abs(s - 1.0) > 0.02 and abs(t - 1.0) > 0.02 and s + t > 1.05:
            return s, t


def test_criterion_1_trapezoid_bielliptic_constants():
    t0 = time.perf_counter()
    sol = qe.trapezoid_bielliptic_solve()
    elapsed = time.perf_counter() - t0
    assert abs(sol.t - 1.658119) < 1e-4
    assert abs(sol.k - 0.6161335) < 1e-4
    assert abs(sol.tau - 0.69013) < 1e-4
    assert elapsed < 1.0
    _report(1, "bielliptic trapezoid constants t, k, tau within 1e-4, under 1 s")


def test_criterion_2_polynomial_p():
    assert qe.poly_p(1) == 64
    assert abs(qe.poly_p(1.5) - (-23.07715)) < 1e-4
    roots = qe.poly_p_real_roots()
    expected = [-0.8295535, 1.232267, 1.778672]
    assert len(roots) == 3
    for got, want in zip(roots, expected):
        assert abs(got - want) < 1e-5
    _report(2, "p(1)=64 exactly, p(1.5) and all three real roots pinned")


def test_criterion_3_remark_values():
    t = 1.0 + math.sqrt(2.0) / 3.0
    closed = qe.trapezoid_min_ecc_sq(t)
    assert abs(closed - 2.0 / (math.sqrt(19.0) + 1.0)) < 1e-9
    assert abs(closed - 0.373) < 1e-3
    quad = qe.validate([(0, 0), (1, 0), (1, t), (0, 1)])
    _, geom, diag = qe.min_ecc_circumscribed(quad)
    assert diag.path == "closed_form_trapezoid"
    assert abs(geom.ecc**2 - 2.0 / (math.sqrt(19.0) + 1.0)) < 1e-9
    sol = qe.trapezoid_inscribed_solution(t)
    assert abs(sol.k0 - 0.5918015) < 1e-5
    assert abs(sol.ecc_sq - 0.511) < 1e-3
    _report(3, "trapezoid t=1+sqrt(2)/3: circumscribed 2/(sqrt(19)+1), k0, 0.511")


def test_criterion_4_family_bisection():
    t0 = time.perf_counter()
    member = qe.find_bielliptic_in_family(tol=1e-9)
    elapsed = time.perf_counter() - t0
    assert 0.0 < member.r < 1.0
    gap = member.ecc_inscribed - member.ecc_circumscribed
    assert abs(gap) < 1e-9
    assert member.ecc_inscribed > 0.0
    assert not qe.is_cyclic(member.quad)
    assert not qe.is_tangential(member.quad)
    m0 = qe.family_member(0.0)
    m1 = qe.family_member(1.0)
    assert m0.ecc_inscribed == 0.0 < m0.ecc_circumscribed
    assert m1.ecc_inscribed > 0.0 == m1.ecc_circumscribed
    assert elapsed < 10.0
    _report(4, "family bisection: |ecc_I - ecc_O| < 1e-9, endpoints signed, <10 s")


def test_criterion_5_closed_form_vs_grids():
    rng = np.random.default_rng(5)
    t0 = time.perf_counter()
    for _ in range(100):
        frame = _random_frame(rng)
        pencil = FramePencil(frame)
        lo, hi = pencil.interval()
        pa = np.array([0.0, frame.k, 0.0])
        pb = np.array([frame.h, 0.0, 0.0])
        pc = np.array([0.5 * frame.q, 0.5 * frame.p, 0.0])
        n = 100_000
        _, x_best, r_best = scan_axis_ratio(pa, pb, pc, lo, hi, n)
        v0 = qe.v_star(frame).v0
        step = (hi - lo) / (n + 1)
        assert abs(v0 - x_best) <= step * (1.0 + 1e-9)
        assert qe.ratio_f(frame, v0) >= r_best - 1e-12
    frame_elapsed = time.perf_counter() - t0
    assert frame_elapsed < 60.0

    t0 = time.perf_counter()
    for _ in range(100):
        s, t = _random_st(rng)
        obj = objective(s, t)
        lo, hi = obj.interval
        n = 1_000_000
        _, u_best, _ = scan_beta(s, t, lo, hi, n)
        u_star = gamma_root(obj)
        step = (hi - lo) / (n + 1)
        assert abs(u_star - u_best) <= step * (1.0 + 1e-9)
    beta_elapsed = time.perf_counter() - t0
    assert beta_elapsed < 60.0
    _report(5, "closed forms match 1e5/1e6-point grid sweeps within one step")


def test_criterion_6_conjugate_direction_identities():
    rng = np.random.default_rng(6)
    for _ in range(100):
        frame = _random_frame(rng)
        sol = qe.v_star(frame)
        directions = qe.common_conjugate_directions(frame)
        pencil = FramePencil(frame)
        geom = qe.ellipse_geometry(pencil.member(sol.v0))
        t1, t2 = qe.equal_conjugate_directions(sol, geom)
        err = min(
            abs(t1 - directions.M1) + abs(t2 - directions.M2),
            abs(t1 - directions.M2) + abs(t2 - directions.M1),
        )
        assert err < 1e-9
        lo, hi = pencil.interval()
        for v in np.linspace(lo, hi, 22)[1:-1]:
            m2 = qe.conjugate_slope(pencil.member(float(v)), directions.M1)
            assert abs(m2 - directions.M2) <= 1e-9 * max(1.0, abs(directions.M2))
    _report(6, "equal-conjugate-diameter slopes equal M1, M2 on 100 frames")


def test_criterion_7_center_separation_certificate():
    rng = np.random.default_rng(7)
    for i in range(1000):
        quad = qe.random_convex_quad(rng)
        canon = qe.canonicalize(quad)
        if canon.kind == "general":
            lo, hi = CanonicalPencil(canon.s, canon.t).interval()
            u = lo + rng.uniform(0.01, 0.99) * (hi - lo)
        else:
            u = 0.25 * (canon.t - 1.0) ** 2 + rng.uniform(0.01, 3.0)
        assert qe.theorem_center_separation(quad, u) > 0.0
    for _ in range(50):
        s, t = _random_st(rng)
        base = (t * t - t) / (s * s - s)
        x_plus, _ = canonical_center(s, t, base)
        x_minus, _ = canonical_center(s, t, -base)
        assert abs(x_plus - 0.5 * s) < 1e-10
        assert abs(x_minus - 0.5) < 1e-10
    _report(7, "1000 positive center-to-Z distances; excluded parameters pinned")


def test_criterion_8_extraction_vs_eigen_oracle():
    from quadellipse.cli import _eigen_extraction

    rng = np.random.default_rng(8)
    for _ in range(1000):
        cx, cy = rng.uniform(-5.0, 5.0, 2)
        a = rng.uniform(0.5, 5.0)
        b = rng.uniform(0.2, 0.98) * a
        phi = rng.uniform(0.0, math.pi)
        geom = qe.EllipseGeometry(
            center=(cx, cy), a=a, b=b, phi=phi,
            ecc=math.sqrt(1.0 - (b / a) ** 2),
        )
        conic = conic_from_geometry(geom)
        got = qe.ellipse_geometry(conic)
        center, ao, bo, phio = _eigen_extraction(conic)
        assert abs(got.a - ao) / ao < 1e-10
        assert abs(got.b - bo) / bo < 1e-10
        assert abs(got.center[0] - center[0]) <= 1e-10 * max(1.0, abs(center[0]))
        assert abs(got.center[1] - center[1]) <= 1e-10 * max(1.0, abs(center[1]))
        dphi = abs(got.phi - phio)
        assert min(dphi, abs(dphi - math.pi)) < 1e-10
    _report(8, "axis/center/angle extraction matches eigen oracle to 1e-10")


def test_criterion_9_symmetry_pins():
    for s in (0.8, 1.5, 2.0, 3.7):
        assert abs(gamma_root(objective(s, s)) - 1.0) < 1e-12
    cyclic = qe.validate([(0, 0), (1, 0), (0.5, 0.5 * (1 + math.sqrt(2))), (0, 1)])
    assert qe.is_cyclic(cyclic)
    _, geom_o, _ = qe.min_ecc_circumscribed(cyclic)
    assert geom_o.ecc < 1e-8
    tangential = qe.validate([(0, 0), (1, 0), (2, 2), (0, 1)])
    assert qe.is_tangential(tangential)
    _, geom_i, _ = qe.min_ecc_inscribed(tangential)
    assert geom_i.ecc < 1e-8
    _report(9, "s=t gives u*=1; cyclic/tangential give vanishing eccentricity")


def test_criterion_10_affine_equivariance_min_area():
    rng = np.random.default_rng(10)
    for _ in range(50):
        quad = qe.random_convex_quad(rng)
        while True:
            m = rng.uniform(-2.0, 2.0, (2, 2))
            if abs(np.linalg.det(m)) > 0.3:
                break
        shift = rng.uniform(-3.0, 3.0, 2)
        amap = AffineMap.create(m, shift)
        image = qe.validate([amap.apply(p) for p in quad.points()])
        c1, _, a1, _ = qe.min_area_circumscribed(quad)
        c2, _, a2, _ = qe.min_area_circumscribed(image)
        transported = transform_conic(c1, amap).normalized()
        direct = c2.normalized()
        for field in "ABCDEF":
            assert abs(getattr(transported, field) - getattr(direct, field)) < 1e-8
        assert abs(a2 - a1 * abs(np.linalg.det(m))) <= 1e-8 * a2
    _report(10, "minimal-area solution transports affinely; areas scale by |det|")
