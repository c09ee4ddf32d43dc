"""The unique inscribed ellipse through a point with a prescribed tangent slope.

For an interior point (x0, y0) and a finite slope r not aiming at a triangle
vertex, the unique parameters are

    w = (1 - x0 - y0)(r x0 - y0)^2 / q_w(r),
    t = (1 - x0 - y0)(r x0 - y0)^2 / q_t(r),

where q_w and q_t are positive-definite quadratics in r.  A vertical tangent
has its own closed form (the r -> infinity limit).  When r does aim at a
vertex no inscribed ellipse attains it, and the solver reports that as an
ordinary outcome, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .config import DEFAULT_TOL, Tolerances
from .geom import Point, Slope, Vertex, as_point, require_interior
from .kernel import EllipseParam, w_quadratic_at


@dataclass(frozen=True)
class PointSlopeQuery:
    p: Point
    slope: Slope


@dataclass(frozen=True)
class NoSolution:
    """The slope aims from the point at this triangle vertex."""

    vertex: Vertex


@dataclass(frozen=True)
class SlopeRationals:
    """Values of the two positive denominators q_w(r), q_t(r).

    ``r0`` is the one slope at which the elimination route through the
    system degenerates; the closed form still covers it, so it is exposed
    only as a diagnostic.
    """

    qw: float
    qt: float
    r0: Optional[float] = None


def vertex_slopes(p: Point) -> tuple[Slope, Slope, Slope]:
    """Slopes of the lines from p toward (0,0), (1,0), (0,1).

    All three are finite for interior p (0 < x < 1 keeps every denominator
    away from zero).
    """
    p = as_point(p)
    require_interior(p)
    x, y = p
    return (
        Slope.finite(y / x),
        Slope.finite(y / (x - 1.0)),
        Slope.finite((y - 1.0) / x),
    )


def slope_rationals(p: Point, r: float) -> SlopeRationals:
    p = as_point(p)
    require_interior(p)
    x, y = p
    qw = (x * x - x * x * x) * r * r + 2.0 * y * x * x * r + y - y * y - x * y * y
    qt = (x - x * x * y - x * x) * r * r + 2.0 * x * y * y * r + y * y - y * y * y
    r0 = y * (2.0 * x + y - 1.0) / (x * (2.0 * x + y - 2.0))
    return SlopeRationals(qw, qt, r0)


def solve_point_slope_unit(
    query: PointSlopeQuery, tol: Tolerances = DEFAULT_TOL
) -> Union[EllipseParam, NoSolution]:
    """Closed-form parameters, or :class:`NoSolution` on an excluded slope."""
    p = as_point(query.p)
    require_interior(p)
    x, y = p
    if query.slope.is_vertical:
        w = (1.0 - x - y) / (1.0 - x)
        t = x * (1.0 - x - y) / (1.0 - x * (1.0 + y))
        return EllipseParam(w, t)
    r = query.slope.value
    for vertex, vs in zip((Vertex.ORIGIN, Vertex.RIGHT, Vertex.TOP), vertex_slopes(p)):
        if abs(r - vs.value) < tol.slope_exclusion * (1.0 + abs(r)):
            return NoSolution(vertex)
    sr = slope_rationals(p, r)
    shared = (1.0 - x - y) * (r * x - y) ** 2
    return EllipseParam(shared / sr.qw, shared / sr.qt)


def residual_system13(p: Point, slope: Slope, param: EllipseParam) -> tuple[float, float]:
    """Term-normalized residuals of the through-point and slope conditions.

    Each residual divides by the largest monomial magnitude of its equation,
    so the values are scale-free and safe against internal cancellation.
    """
    p = as_point(p)
    x, y = p
    w, t = param

    poly = w_quadratic_at(p, t)
    f1 = poly.c2 * w * w + poly.c1 * w + poly.c0
    mag1 = max(
        (abs(1.0 - 4.0 * x * y) * t * t + 2.0 * x * abs(1.0 - 2.0 * y) * t + x * x)
        * w * w,
        abs(poly.c1) * w,
        abs(poly.c0),
        1e-300,
    )

    if slope.is_vertical:
        f2 = 2.0 * x * (t * t - t) * w * w - (2.0 * t * t * x - t * x - t * t) * w - y * t * t
        mag2 = max(
            2.0 * x * (t * t + t) * w * w,
            (2.0 * t * t * x + t * x + t * t) * w,
            y * t * t,
            1e-300,
        )
    else:
        r = slope.value
        lead = (2.0 * r * t * t - 2.0 * r * t - 1.0) * x + 2.0 * t * (t - 1.0) * y + t
        mid = (2.0 * t - 1.0) * y + r * (2.0 * t - 1.0) * x - r * t
        f2 = lead * w * w - t * mid * w - r * y * t * t
        mag2 = max(
            ((2.0 * abs(r) * (t * t + t) + 1.0) * x + 2.0 * (t * t + t) * y + t) * w * w,
            (abs(2.0 * t - 1.0) * (y + abs(r) * x) + abs(r) * t) * t * w,
            abs(r) * y * t * t,
            1e-300,
        )
    return (abs(f1) / mag1, abs(f2) / mag2)
