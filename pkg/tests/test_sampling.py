import numpy as np

from quadellipse.quad import QuadShape
from quadellipse.sampling import random_convex_quad


def test_random_general_quads_are_valid_and_reproducible():
    rng = np.random.default_rng(42)
    quads = [random_convex_quad(rng) for _ in range(50)]
    for quad in quads:
        assert quad.shape is QuadShape.GENERAL
    rng2 = np.random.default_rng(42)
    again = [random_convex_quad(rng2) for _ in range(50)]
    assert [q.vertices for q in quads] == [q.vertices for q in again]


def test_random_trapezoids():
    rng = np.random.default_rng(7)
    for _ in range(20):
        quad = random_convex_quad(rng, shape=QuadShape.TRAPEZOID)
        assert quad.shape is QuadShape.TRAPEZOID
