"""The independent witness: tangency certificates and brute-force basins."""

import math

import numpy as np
import pytest

from inellipse.affine import Triangle
from inellipse.conic import ConicCoeffs
from inellipse.errors import NotAnEllipse
from inellipse.geom import Point, Slope
from inellipse.kernel import EllipseParam, inscribed_conic
from inellipse.oracle import (
    _point_slope_residuals,
    _two_point_residuals,
    brute_force_point_slope,
    brute_force_two_points,
    verify_inscribed,
)

from helpers import random_generic_pair, random_interior, random_param

EX1 = (Point(0.25, 0.125), Point(0.5, 1 / 6))


def axis_aligned_ellipse(cx, cy, rx, ry):
    """((x-cx)/rx)^2 + ((y-cy)/ry)^2 = 1 in implicit form."""
    a, b = 1.0 / (rx * rx), 1.0 / (ry * ry)
    return ConicCoeffs(a, b, 0.0, -2.0 * a * cx, -2.0 * b * cy, a * cx * cx + b * cy * cy - 1.0)


class TestVerifyInscribed:
    def test_midpoint_conic_contacts(self):
        report = verify_inscribed(inscribed_conic(EllipseParam(0.5, 0.5)))
        assert report.passed
        # Contact parameter 1/2 along every side.
        expected = [(0.5, 0.0), (0.5, 0.5), (0.0, 0.5)]
        for side, (ex, ey) in zip(report.sides, expected):
            assert side.contact == pytest.approx((ex, ey), abs=1e-12)

    def test_incircle(self):
        r = (2.0 - math.sqrt(2.0)) / 2.0
        incircle = ConicCoeffs(1.0, 1.0, 0.0, -2.0 * r, -2.0 * r, r * r)
        assert verify_inscribed(incircle).passed

    def test_small_circle_fails_on_hypotenuse(self):
        # Distance from (0.2, 0.2) to the hypotenuse is (1 - 0.4)/sqrt(2),
        # far from the radius 0.1, so that side cannot be tangent.
        circle = axis_aligned_ellipse(0.2, 0.2, 0.1, 0.1)
        report = verify_inscribed(circle)
        assert not report.passed
        assert report.sides[1].residual > 1e-3

    def test_random_inscribed_family_passes(self):
        rng = np.random.default_rng(90)
        for _ in range(200):
            conic = inscribed_conic(EllipseParam(*random_param(rng)))
            assert verify_inscribed(conic).passed

    def test_random_non_inscribed_fail(self):
        rng = np.random.default_rng(92)
        for _ in range(20):
            cx, cy = random_interior(rng, margin=0.1)
            rx, ry = 0.02 + 0.2 * rng.random(2)
            report = verify_inscribed(axis_aligned_ellipse(cx, cy, rx, ry))
            assert not report.passed

    def test_rejects_non_ellipse(self):
        with pytest.raises(NotAnEllipse):
            verify_inscribed(ConicCoeffs(1.0, -1.0, 0.0, 0.0, 0.0, 1.0))

    def test_world_triangle(self):
        tri = Triangle(Point(-1.0, 2.0), Point(3.0, 1.0), Point(0.5, 5.0))
        # Incircle of the world triangle, built classically.
        a = math.dist(tri.b, tri.c)
        b = math.dist(tri.a, tri.c)
        c = math.dist(tri.a, tri.b)
        s = a + b + c
        cx = (a * tri.a.x + b * tri.b.x + c * tri.c.x) / s
        cy = (a * tri.a.y + b * tri.b.y + c * tri.c.y) / s
        area2 = abs(tri.signed_area2())
        r = area2 / s
        assert verify_inscribed(axis_aligned_ellipse(cx, cy, r, r), tri).passed


class TestBruteForceTwoPoints:
    def test_published_generic_example(self):
        basins = brute_force_two_points(*EX1)
        expected = [(0.008, 0.003), (0.13, 0.03), (0.43, 0.74), (0.94, 0.22)]
        assert len(basins) == 4
        for (w, t), (te, we) in zip(basins, expected):
            assert t == pytest.approx(te, abs=0.01)
            assert w == pytest.approx(we, abs=0.01)

    def test_vertex_line_example(self):
        basins = brute_force_two_points(Point(1 / 3, 0.2), Point(0.25, 0.4))
        assert len(basins) == 2

    def test_random_generic_pair_has_four(self):
        rng = np.random.default_rng(94)
        p1, p2 = random_generic_pair(rng)
        assert len(brute_force_two_points(p1, p2)) == 4

    def test_honesty_bound(self):
        basins = brute_force_two_points(*EX1)
        for w, t in basins:
            r1, r2 = _two_point_residuals(*EX1, w, t)
            assert max(float(r1), float(r2)) < 1e-12

    def test_grid_floor(self):
        with pytest.raises(ValueError):
            brute_force_two_points(*EX1, grid_n=32)


class TestBruteForcePointSlope:
    def test_published_finite_example(self):
        basins = brute_force_point_slope(Point(0.5, 0.25), Slope.finite(2.0))
        assert len(basins) == 1
        assert basins[0][0] == pytest.approx(9 / 58, abs=1e-8)
        assert basins[0][1] == pytest.approx(9 / 59, abs=1e-8)

    def test_published_vertical_example(self):
        basins = brute_force_point_slope(Point(1 / 3, 1 / 3), Slope.vertical())
        assert len(basins) == 1
        assert basins[0][0] == pytest.approx(0.5, abs=1e-8)
        assert basins[0][1] == pytest.approx(0.2, abs=1e-8)

    def test_excluded_slope_is_empty(self):
        assert brute_force_point_slope(Point(0.5, 0.25), Slope.finite(0.5)) == []

    def test_honesty_bound(self):
        p, s = Point(0.4, 0.3), Slope.finite(-3.0)
        for w, t in brute_force_point_slope(p, s):
            r1, r2 = _point_slope_residuals(p, s, w, t)
            assert max(float(r1), float(r2)) < 1e-12
