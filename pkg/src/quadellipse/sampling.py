"""Random convex quadrilaterals for probes and property tests."""

from __future__ import annotations

import numpy as np

from .errors import NumericError, ValidationError
from .quad import ConvexQuadrilateral, QuadShape, validate


def random_convex_quad(rng, shape=QuadShape.GENERAL, max_tries=1000) -> ConvexQuadrilateral:
    """Sample a strictly convex quadrilateral of the requested shape class.

    Vertices are drawn uniformly in the unit square, ordered by angle around
    their centroid, and rejected until validation passes with the right shape.
    rng is a numpy Generator, so runs are reproducible from a seed.
    """
    for _ in range(max_tries):
        pts = rng.uniform(-1.0, 1.0, size=(4, 2))
        centroid = pts.mean(axis=0)
        order = np.argsort(np.arctan2(*(pts - centroid).T[::-1]))
        try:
            quad = validate(pts[order])
        except ValidationError:
            continue
        if quad.shape is shape:
            return quad
        if shape is QuadShape.TRAPEZOID:
            # force one parallel pair by translating the fourth vertex
            p = pts[order]
            p[3] = p[2] + (p[0] - p[1]) * rng.uniform(0.3, 1.7)
            try:
                quad = validate(p)
            except ValidationError:
                continue
            if quad.shape is shape:
                return quad
    raise NumericError(f"failed to sample a {shape.value} quadrilateral")
