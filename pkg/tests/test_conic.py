"""Conic representation: evaluation, ellipse test, slopes, centers, transport."""

import math

import numpy as np
import pytest

from inellipse.affine import AffineMap, Triangle, invert
from inellipse.conic import (
    ConicCoeffs,
    conic_center,
    conic_close,
    evaluate,
    full_coefficients,
    is_real_ellipse,
    normalize_conic,
    slope_at,
    transform_conic,
)
from inellipse.errors import DegenerateConic, SingularPoint
from inellipse.geom import Point
from inellipse.kernel import EllipseParam, inscribed_conic, tangency_points
from inellipse.oracle import verify_inscribed

from helpers import random_param

UNIT_CIRCLE = ConicCoeffs(1.0, 1.0, 0.0, 0.0, 0.0, -1.0)
# Inscribed-family member for w = t = 1/2 (contact at the side midpoints).
STEINER_RAW = ConicCoeffs(0.25, 0.25, 0.125, -0.25, -0.25, 0.0625)


class TestEvaluate:
    def test_point_on_unit_circle(self):
        assert evaluate(UNIT_CIRCLE, Point(1.0, 0.0)) == 0.0

    def test_circle_center_value(self):
        assert evaluate(UNIT_CIRCLE, Point(0.0, 0.0)) == -1.0

    def test_midpoint_conic_at_contact(self):
        assert abs(evaluate(STEINER_RAW, Point(0.5, 0.0))) < 1e-15

    def test_half_cross_convention(self):
        # The c field stores half the xy coefficient.
        conic = ConicCoeffs(0.0, 0.0, 0.5, 0.0, 0.0, 0.0)
        assert evaluate(conic, Point(2.0, 3.0)) == pytest.approx(6.0)
        assert full_coefficients(conic)[2] == 1.0


class TestIsRealEllipse:
    def test_unit_circle(self):
        assert is_real_ellipse(UNIT_CIRCLE)

    def test_degenerate_cross(self):
        assert not is_real_ellipse(ConicCoeffs(1.0, 1.0, 1.0, 0.0, 0.0, 0.0))

    def test_imaginary_ellipse(self):
        assert not is_real_ellipse(ConicCoeffs(1.0, 1.0, 0.0, 0.0, 0.0, 1.0))

    def test_sign_flip_invariance(self):
        flipped = ConicCoeffs(*(-v for v in UNIT_CIRCLE))
        assert is_real_ellipse(flipped)

    def test_inscribed_family_always_real(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            w, t = random_param(rng)
            assert is_real_ellipse(inscribed_conic(EllipseParam(w, t)))


class TestSlopeAt:
    def test_printed_regression(self):
        conic = ConicCoeffs(281961.0, 272484.0, -119718.0, -86022.0, -84564.0, 6561.0)
        s = slope_at(conic, Point(0.5, 0.25))
        assert not s.is_vertical
        assert s.value == pytest.approx(2.0, abs=1e-12)

    def test_tangency_slopes(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            param = EllipseParam(*random_param(rng))
            conic = inscribed_conic(param)
            t1, t2, t3 = tangency_points(param)
            assert slope_at(conic, t1).value == pytest.approx(0.0, abs=1e-9)
            assert slope_at(conic, t2).is_vertical
            assert slope_at(conic, t3).value == pytest.approx(-1.0, abs=1e-9)

    def test_singular_point(self):
        # Degenerate pair of lines x^2 - y^2 = 0 crossing at the origin.
        with pytest.raises(SingularPoint):
            slope_at(ConicCoeffs(1.0, -1.0, 0.0, 0.0, 0.0, 0.0), Point(0.0, 0.0))


class TestConicCenter:
    def test_unit_circle(self):
        assert conic_center(UNIT_CIRCLE) == pytest.approx((0.0, 0.0))

    def test_midpoint_conic_centroid(self):
        assert conic_center(STEINER_RAW) == pytest.approx((1 / 3, 1 / 3), abs=1e-15)

    def test_against_center_formula(self):
        # Independent route: the closed-form center in terms of (w, t).
        w, t = 6 / 7, 2 / 3
        c = conic_center(inscribed_conic(EllipseParam(w, t)))
        den = 2.0 * (w + (1.0 - w) * t)
        assert c == pytest.approx((t / den, w / den), abs=1e-15)
        assert c == pytest.approx((7 / 20, 9 / 20), abs=1e-15)

    def test_degenerate(self):
        with pytest.raises(DegenerateConic):
            conic_center(ConicCoeffs(1.0, 1.0, 1.0, 0.0, 0.0, -1.0))


class TestTransformConic:
    def test_identity(self):
        out = transform_conic(UNIT_CIRCLE, AffineMap(1.0, 0.0, 0.0, 1.0))
        assert conic_close(out, UNIT_CIRCLE)

    def test_axis_scale(self):
        out = transform_conic(UNIT_CIRCLE, AffineMap(2.0, 0.0, 0.0, 1.0))
        assert conic_close(out, ConicCoeffs(1.0, 4.0, 0.0, 0.0, 0.0, -4.0))

    def test_doubled_triangle_tangency(self):
        double = AffineMap(2.0, 0.0, 0.0, 2.0)
        out = transform_conic(STEINER_RAW, double)
        tri = Triangle(Point(0, 0), Point(2, 0), Point(0, 2))
        report = verify_inscribed(out, tri)
        assert report.passed
        contacts = sorted((round(c.contact.x, 9), round(c.contact.y, 9)) for c in report.sides)
        assert contacts == [(0.0, 1.0), (1.0, 0.0), (1.0, 1.0)]

    def test_scale_equivalence_of_action(self):
        rng = np.random.default_rng(3)
        m = AffineMap(1.3, -0.4, 0.7, 2.1, 0.5, -1.0)
        ratios = []
        for _ in range(20):
            p = Point(*rng.uniform(-2, 2, size=2))
            num = evaluate(transform_conic(UNIT_CIRCLE, m), Point(*np.array(
                [m.m11 * p.x + m.m12 * p.y + m.tx, m.m21 * p.x + m.m22 * p.y + m.ty]
            )))
            den = evaluate(UNIT_CIRCLE, p)
            ratios.append(num / den)
        assert max(ratios) - min(ratios) < 1e-9 * max(abs(r) for r in ratios)

    def test_center_covariance(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            vals = rng.uniform(-2, 2, size=6)
            m = AffineMap(*vals)
            if abs(m.det()) < 0.1:
                continue
            c0 = conic_center(UNIT_CIRCLE)
            moved = transform_conic(UNIT_CIRCLE, m)
            expected = Point(m.m11 * c0.x + m.m12 * c0.y + m.tx, m.m21 * c0.x + m.m22 * c0.y + m.ty)
            assert conic_center(moved) == pytest.approx(expected, abs=1e-9)


class TestNormalization:
    def test_largest_entry_becomes_one(self):
        n = normalize_conic(ConicCoeffs(2.0, -8.0, 1.0, 0.0, 0.5, -4.0))
        assert max(n, key=abs) == 1.0

    def test_conic_close_up_to_scale(self):
        c = ConicCoeffs(1.0, 2.0, 0.5, -1.0, 0.0, 3.0)
        scaled = ConicCoeffs(*(-0.37 * v for v in c))
        assert conic_close(c, scaled)
        assert not conic_close(c, ConicCoeffs(1.0, 2.0, 0.5, -1.0, 0.0, 3.1))
