"""Batch command-line interface: analysis, verification sweeps, SVG figures.

All results are emitted as JSON documents (floats use Python's shortest
round-trip repr, so identical inputs give byte-identical output). Exit codes:
0 success, 1 verification counterexample, 2 validation error, 3 unsupported
shape, 4 numeric failure, 5 unwritable output path.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .bielliptic import (
    classify_bielliptic,
    find_bielliptic_in_family,
    trapezoid_bielliptic_solve,
)
from .conic import AffineMap, Conic, conic_from_geometry, ellipse_geometry
from .errors import (
    InputError,
    NumericError,
    ParameterDomainError,
    UnsupportedShapeError,
    ValidationError,
)
from .inscribed import min_ecc_inscribed, theorem_center_separation
from .min_area import min_area_circumscribed
from .min_ecc import (
    common_conjugate_directions,
    equal_conjugate_directions,
    min_ecc_circumscribed,
    v_star,
)
from .pencil import CanonicalPencil, FramePencil
from .quad import (
    ConvexQuadrilateral,
    SteinerFrame,
    canonicalize,
    diagonal_segment,
    is_cyclic,
    is_tangential,
    validate,
)
from .sampling import random_convex_quad

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_VALIDATION = 2
EXIT_UNSUPPORTED = 3
EXIT_NUMERIC = 4
EXIT_UNWRITABLE = 5


def _read_input(path):
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read input: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not valid JSON: {exc}") from exc


def parse_quad_document(doc) -> ConvexQuadrilateral:
    """Accepts a raw 4x2 vertex array, {"vertices": ...}, or the canonical
    shorthands {"s": .., "t": ..} and {"t": .., "trapezoid": true}."""
    if isinstance(doc, dict):
        if "vertices" in doc:
            return validate(doc["vertices"])
        if "trapezoid" in doc and doc.get("trapezoid"):
            t = float(doc["t"])
            return validate([(0.0, 0.0), (1.0, 0.0), (1.0, t), (0.0, 1.0)])
        if "s" in doc and "t" in doc:
            s, t = float(doc["s"]), float(doc["t"])
            return validate([(0.0, 0.0), (1.0, 0.0), (s, t), (0.0, 1.0)])
        raise InputError("expected 'vertices', 's'/'t', or 't'/'trapezoid' keys")
    return validate(doc)


def _conic_dict(conic: Conic):
    return {"A": conic.A, "B": conic.B, "C": conic.C,
            "D": conic.D, "E": conic.E, "F": conic.F}


def _geometry_dict(geom):
    return {
        "center": [float(geom.center[0]), float(geom.center[1])],
        "a": geom.a, "b": geom.b, "phi": geom.phi, "ecc": geom.ecc,
    }


def _diag_dict(diag):
    return {
        "path": diag.path,
        "iterations": diag.iterations,
        "residuals": {k: v for k, v in diag.residuals.items()},
    }


def result_document(conic, geom, diag, module, operation):
    return {
        "conic": _conic_dict(conic),
        "geometry": _geometry_dict(geom),
        "diagnostics": _diag_dict(diag),
        "provenance": {"module": module, "operation": operation,
                       "version": __version__},
    }


def _emit(payload, args):
    text = json.dumps(payload, indent=None if args.quiet else 2, sort_keys=True)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError:
            print("cannot write output path", file=sys.stderr)
            return EXIT_UNWRITABLE
    else:
        print(text)
    return EXIT_OK


def cmd_circum_min_ecc(args):
    quad = parse_quad_document(_read_input(args.input))
    conic, geom, diag = min_ecc_circumscribed(quad)
    return _emit(result_document(conic, geom, diag,
                                 "min_ecc_circum", "circum-min-ecc"), args)


def cmd_circum_min_area(args):
    quad = parse_quad_document(_read_input(args.input))
    conic, geom, area, diag = min_area_circumscribed(quad)
    doc = result_document(conic, geom, diag, "min_area_circum", "circum-min-area")
    doc["area"] = area
    return _emit(doc, args)


def cmd_inscribed_min_ecc(args):
    quad = parse_quad_document(_read_input(args.input))
    conic, geom, diag = min_ecc_inscribed(quad)
    return _emit(result_document(conic, geom, diag,
                                 "inscribed", "inscribed-min-ecc"), args)


def cmd_bielliptic(args):
    quad = parse_quad_document(_read_input(args.input))
    report = classify_bielliptic(quad, tol=args.tol or 1e-9)
    return _emit({
        "ecc_inscribed": report.ecc_inscribed,
        "ecc_circumscribed": report.ecc_circumscribed,
        "difference": report.difference,
        "is_bielliptic": report.is_bielliptic,
        "tol": report.tol,
        "provenance": {"module": "bielliptic", "operation": "bielliptic",
                       "version": __version__},
    }, args)


def cmd_analyze(args):
    quad = parse_quad_document(_read_input(args.input))
    c1, g1, d1 = min_ecc_circumscribed(quad)
    c2, g2, area, d2 = min_area_circumscribed(quad)
    c3, g3, d3 = min_ecc_inscribed(quad)
    report = classify_bielliptic(quad, tol=args.tol or 1e-9)
    bundle = {
        "shape": quad.shape.value,
        "cyclic": is_cyclic(quad),
        "tangential": is_tangential(quad),
        "circum_min_ecc": result_document(c1, g1, d1, "min_ecc_circum",
                                          "circum-min-ecc"),
        "circum_min_area": result_document(c2, g2, d2, "min_area_circum",
                                           "circum-min-area"),
        "inscribed_min_ecc": result_document(c3, g3, d3, "inscribed",
                                             "inscribed-min-ecc"),
        "bielliptic": {
            "ecc_inscribed": report.ecc_inscribed,
            "ecc_circumscribed": report.ecc_circumscribed,
            "difference": report.difference,
            "is_bielliptic": report.is_bielliptic,
        },
        "provenance": {"module": "cli_io", "operation": "analyze",
                       "version": __version__},
    }
    bundle["circum_min_area"]["area"] = area
    return _emit(bundle, args)


def cmd_family_search(args):
    member = find_bielliptic_in_family(tol=args.tol or 1e-9)
    return _emit({
        "r": member.r, "s": member.s, "t": member.t,
        "ecc_inscribed": member.ecc_inscribed,
        "ecc_circumscribed": member.ecc_circumscribed,
        "tau": 0.5 * (member.ecc_inscribed + member.ecc_circumscribed),
        "cyclic": is_cyclic(member.quad),
        "tangential": is_tangential(member.quad),
        "provenance": {"module": "bielliptic", "operation": "family-search",
                       "version": __version__},
    }, args)


def cmd_trapezoid_bielliptic(args):
    sol = trapezoid_bielliptic_solve()
    return _emit({
        "rho": sol.rho, "t": sol.t, "k": sol.k, "tau": sol.tau,
        "residual_cubic": sol.residual_cubic,
        "residual_shape": sol.residual_shape,
        "provenance": {"module": "bielliptic", "operation": "trapezoid-bielliptic",
                       "version": __version__},
    }, args)


def _trial_rng(seed, index):
    return np.random.default_rng([seed, index])


def _verify_theorem3(seed, trials):
    worst = math.inf
    failures = []
    for i in range(trials):
        rng = _trial_rng(seed, i)
        quad = random_convex_quad(rng)
        canon = canonicalize(quad)
        if canon.kind == "general":
            lo, hi = CanonicalPencil(canon.s, canon.t).interval()
            u = lo + rng.uniform(0.01, 0.99) * (hi - lo)
        else:
            lo = 0.25 * (canon.t - 1.0) ** 2
            u = lo + rng.uniform(0.01, 3.0)
        d = theorem_center_separation(quad, u)
        worst = min(worst, d)
        if not d > 0.0:
            failures.append({"trial": i, "distance": d})
    return {"suite": "theorem3", "trials": trials, "failures": failures,
            "worst_distance": worst}


def _random_frame(rng) -> SteinerFrame:
    h = rng.uniform(1.0, 10.0)
    k = rng.uniform(1.0, 10.0)
    p = rng.uniform(0.1, 0.95) * h
    q = rng.uniform(0.1, 0.95) * k
    return SteinerFrame(h=h, k=k, p=p, q=q, isometry=AffineMap.identity())


def _verify_conjugacy(seed, trials):
    worst = 0.0
    failures = []
    for i in range(trials):
        rng = _trial_rng(seed, i)
        frame = _random_frame(rng)
        sol = v_star(frame)
        directions = common_conjugate_directions(frame)
        pencil = FramePencil(frame)
        geom = ellipse_geometry(pencil.member(sol.v0))
        t1, t2 = equal_conjugate_directions(sol, geom)
        err = min(
            abs(t1 - directions.M1) + abs(t2 - directions.M2),
            abs(t1 - directions.M2) + abs(t2 - directions.M1),
        )
        lo, hi = pencil.interval()
        from .conic import conjugate_slope

        for v in np.linspace(lo, hi, 22)[1:-1]:
            m2 = conjugate_slope(pencil.member(float(v)), directions.M1)
            err = max(err, abs(m2 - directions.M2) / max(1.0, abs(directions.M2)))
        worst = max(worst, err)
        if err > 1e-9:
            failures.append({"trial": i, "error": err})
    return {"suite": "conjugacy", "trials": trials, "failures": failures,
            "worst_residual": worst}


def _eigen_extraction(conic: Conic):
    """Independent center/axes/angle extraction via eigendecomposition."""
    m = np.array([[conic.A, conic.C], [conic.C, conic.B]])
    center = np.linalg.solve(2.0 * m, [-conic.D, -conic.E])
    const = conic.F + 0.5 * (conic.D * center[0] + conic.E * center[1])
    w, vecs = np.linalg.eigh(m)
    axes = np.sqrt(-const / w)
    order = np.argsort(axes)[::-1]
    a, b = axes[order]
    major = vecs[:, order[0]]
    phi = math.atan2(major[1], major[0]) % math.pi
    return center, float(a), float(b), phi


def _verify_oracle(seed, trials):
    worst = 0.0
    failures = []
    from .conic import EllipseGeometry

    for i in range(trials):
        rng = _trial_rng(seed, i)
        cx, cy = rng.uniform(-5.0, 5.0, 2)
        a = rng.uniform(0.5, 5.0)
        b = rng.uniform(0.2, 0.98) * a
        phi = rng.uniform(0.0, math.pi)
        geom = EllipseGeometry(center=(cx, cy), a=a, b=b, phi=phi,
                               ecc=math.sqrt(1.0 - (b / a) ** 2))
        conic = conic_from_geometry(geom)
        got = ellipse_geometry(conic)
        center, ao, bo, phio = _eigen_extraction(conic)
        err = max(
            abs(got.a - ao) / ao,
            abs(got.b - bo) / bo,
            abs(got.center[0] - center[0]) / max(1.0, abs(center[0])),
            abs(got.center[1] - center[1]) / max(1.0, abs(center[1])),
        )
        dphi = abs(got.phi - phio)
        dphi = min(dphi, abs(dphi - math.pi))
        err = max(err, dphi)
        worst = max(worst, err)
        if err > 1e-10:
            failures.append({"trial": i, "error": err})
    return {"suite": "oracle", "trials": trials, "failures": failures,
            "worst_residual": worst}


def cmd_verify(args):
    runner = {
        "theorem3": _verify_theorem3,
        "conjugacy": _verify_conjugacy,
        "oracle": _verify_oracle,
    }[args.suite]
    summary = runner(args.seed, args.trials)
    summary["seed"] = args.seed
    summary["passed"] = not summary["failures"]
    code = _emit(summary, args)
    if code != EXIT_OK:
        return code
    return EXIT_OK if summary["passed"] else EXIT_COUNTEREXAMPLE


def _point_strictly_inside(quad: ConvexQuadrilateral, point):
    pts = quad.points()
    p = np.asarray(point, dtype=float)
    for i in range(4):
        e = pts[(i + 1) % 4] - pts[i]
        if e[0] * (p[1] - pts[i][1]) - e[1] * (p[0] - pts[i][0]) <= 0.0:
            return False
    return True


def cmd_conjecture_probe(args):
    inside = 0
    candidates = []
    for i in range(args.trials):
        rng = _trial_rng(args.seed, i)
        quad = random_convex_quad(rng)
        if args.which == 1:
            _, geom, _ = min_ecc_circumscribed(quad)
        else:
            _, geom, _, _ = min_area_circumscribed(quad)
        if _point_strictly_inside(quad, geom.center):
            inside += 1
        elif len(candidates) < 10:
            candidates.append({
                "trial": i,
                "vertices": [list(v) for v in quad.vertices],
                "center": [float(geom.center[0]), float(geom.center[1])],
            })
    return _emit({
        "conjecture": args.which,
        "trials": args.trials,
        "seed": args.seed,
        "inside": inside,
        "outside_or_boundary": args.trials - inside,
        "candidates_for_manual_inspection": candidates,
        "note": "empirical probe only; candidates are not asserted as disproof",
    }, args)


def _svg_ellipse_bbox(geom):
    c, s = math.cos(geom.phi), math.sin(geom.phi)
    hw = math.hypot(geom.a * c, geom.b * s)
    hh = math.hypot(geom.a * s, geom.b * c)
    return (geom.center[0] - hw, geom.center[1] - hh,
            geom.center[0] + hw, geom.center[1] + hh)


def _fmt(x):
    return f"{x:.6f}"


def render_svg(quad: ConvexQuadrilateral) -> str:
    """Deterministic SVG 1.1 figure: the quadrilateral, both extremal
    circumscribed ellipses, the minimal-eccentricity inscribed ellipse, and
    the diagonal-midpoint segment, with a legend."""
    _, geom_o, _ = min_ecc_circumscribed(quad)
    _, geom_a, _, _ = min_area_circumscribed(quad)
    _, geom_i, _ = min_ecc_inscribed(quad)
    seg = diagonal_segment(quad)

    xs = [v[0] for v in quad.vertices]
    ys = [v[1] for v in quad.vertices]
    lo_x, lo_y, hi_x, hi_y = min(xs), min(ys), max(xs), max(ys)
    for g in (geom_o, geom_a, geom_i):
        x1, y1, x2, y2 = _svg_ellipse_bbox(g)
        lo_x, lo_y = min(lo_x, x1), min(lo_y, y1)
        hi_x, hi_y = max(hi_x, x2), max(hi_y, y2)
    mx = 0.1 * max(hi_x - lo_x, hi_y - lo_y)
    vb = (lo_x - mx, lo_y - mx, (hi_x - lo_x) + 2 * mx, (hi_y - lo_y) + 2 * mx)
    stroke = 0.006 * max(vb[2], vb[3])

    def ellipse_tag(g, color, label):
        deg = math.degrees(g.phi)
        return (
            f'  <ellipse cx="{_fmt(g.center[0])}" cy="{_fmt(g.center[1])}" '
            f'rx="{_fmt(g.a)}" ry="{_fmt(g.b)}" '
            f'transform="rotate({_fmt(deg)} {_fmt(g.center[0])} {_fmt(g.center[1])})" '
            f'fill="none" stroke="{color}" stroke-width="{_fmt(stroke)}">'
            f"<title>{label}</title></ellipse>"
        )

    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in quad.vertices)
    (zx1, zy1), (zx2, zy2) = seg.endpoints
    legend_x = vb[0] + 0.02 * vb[2]
    legend_y = vb[1] + 0.05 * vb[3]
    fs = 0.035 * max(vb[2], vb[3])
    legend = []
    for row, (color, text) in enumerate([
        ("#000000", "quadrilateral"),
        ("#1f77b4", "E_O: minimal-eccentricity circumscribed"),
        ("#2ca02c", "E_A: minimal-area circumscribed"),
        ("#d62728", "E_I: minimal-eccentricity inscribed"),
        ("#9467bd", "Z: diagonal-midpoint segment"),
    ]):
        y = legend_y + row * 1.3 * fs
        legend.append(
            f'  <text x="{_fmt(legend_x)}" y="{_fmt(y)}" font-size="{_fmt(fs)}" '
            f'fill="{color}" font-family="monospace">{text}</text>'
        )

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(vb[0])} {_fmt(vb[1])} {_fmt(vb[2])} {_fmt(vb[3])}">',
        f'  <g transform="translate(0 {_fmt(2 * vb[1] + vb[3])}) scale(1 -1)">',
        f'  <polygon points="{pts}" fill="none" stroke="#000000" '
        f'stroke-width="{_fmt(stroke)}"/>',
        ellipse_tag(geom_o, "#1f77b4", "E_O"),
        ellipse_tag(geom_a, "#2ca02c", "E_A"),
        ellipse_tag(geom_i, "#d62728", "E_I"),
        f'  <line x1="{_fmt(zx1)}" y1="{_fmt(zy1)}" x2="{_fmt(zx2)}" '
        f'y2="{_fmt(zy2)}" stroke="#9467bd" stroke-width="{_fmt(1.5 * stroke)}"/>',
        "  </g>",
        *legend,
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def cmd_svg(args):
    quad = parse_quad_document(_read_input(args.input))
    text = render_svg(quad)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError:
            print("cannot write output path", file=sys.stderr)
            return EXIT_UNWRITABLE
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quadellipse",
        description="Extremal ellipses of convex quadrilaterals.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", default="-",
                           help="JSON input path, or '-' for stdin")
        p.add_argument("--output", default=None, help="output path")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=1000)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--json", action="store_true", default=True,
                       help="JSON output (always on)")
        p.add_argument("--quiet", action="store_true")

    for name, fn, needs_input in [
        ("analyze", cmd_analyze, True),
        ("circum-min-ecc", cmd_circum_min_ecc, True),
        ("circum-min-area", cmd_circum_min_area, True),
        ("inscribed-min-ecc", cmd_inscribed_min_ecc, True),
        ("bielliptic", cmd_bielliptic, True),
        ("family-search", cmd_family_search, False),
        ("trapezoid-bielliptic", cmd_trapezoid_bielliptic, False),
        ("svg", cmd_svg, True),
    ]:
        p = sub.add_parser(name)
        common(p, needs_input)
        p.set_defaults(func=fn)

    p = sub.add_parser("verify")
    p.add_argument("suite", choices=["theorem3", "conjugacy", "oracle"])
    common(p, needs_input=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture-probe")
    p.add_argument("which", type=int, choices=[1, 2])
    common(p, needs_input=False)
    p.set_defaults(func=cmd_conjecture_probe)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, InputError) as exc:
        print(json.dumps({"error": "validation", "message": str(exc)}),
              file=sys.stderr)
        return EXIT_VALIDATION
    except UnsupportedShapeError as exc:
        print(json.dumps({"error": "unsupported_shape", "message": str(exc)}),
              file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (NumericError, ParameterDomainError) as exc:
        print(json.dumps({"error": "numeric", "message": str(exc)}),
              file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
