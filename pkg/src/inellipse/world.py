"""Solvers on arbitrary triangles: conjugate to the unit triangle and back.

Each query family maps its data through the triangle's unit map, solves
there, and transports conics, contact points, and centers back with the
inverse map.  The (w, t) parameters themselves are affine invariants of the
solution (contact abscissae on the unit triangle), so they are reported
unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import boundary, point_slope, two_points
from .affine import AffineMap, Triangle, apply_point, apply_slope, invert, map_to_unit
from .config import DEFAULT_TOL, Tolerances
from .conic import ConicCoeffs, conic_center, transform_conic
from .geom import Point, Slope, as_point
from .kernel import EllipseParam, inscribed_conic, tangency_points


@dataclass(frozen=True)
class WorldSolution:
    param: EllipseParam
    conic: ConicCoeffs                     # world coordinates
    tangent_points: tuple[Point, Point, Point]
    center: Point
    residuals: tuple[float, ...]           # unit-coordinate residuals


@dataclass(frozen=True)
class SolveReport:
    case: str
    solutions: tuple[WorldSolution, ...]


def _to_world(param: EllipseParam, back: AffineMap, residuals) -> WorldSolution:
    unit_conic = inscribed_conic(param)
    world_conic = transform_conic(unit_conic, back)
    tps = tangency_points(param)
    return WorldSolution(
        param=param,
        conic=world_conic,
        tangent_points=tuple(apply_point(back, p) for p in tps),
        center=conic_center(world_conic),
        residuals=tuple(residuals),
    )


def solve_two_points(
    tri: Triangle, p1: Point, p2: Point, tol: Tolerances = DEFAULT_TOL
) -> SolveReport:
    """Every inscribed ellipse of ``tri`` through the two world points."""
    fwd = map_to_unit(tri)
    back = invert(fwd)
    u1, u2 = apply_point(fwd, as_point(p1)), apply_point(fwd, as_point(p2))
    case, sols = two_points.solve_two_points_unit(u1, u2, tol)
    return SolveReport(
        case=str(case),
        solutions=tuple(_to_world(s.param, back, s.residuals) for s in sols),
    )


def solve_point_slope(
    tri: Triangle, p: Point, slope: Slope, tol: Tolerances = DEFAULT_TOL
) -> SolveReport:
    """The unique inscribed ellipse through a world point with a world slope.

    Slopes aiming at a vertex yield an empty report with a
    ``no_solution:<vertex>`` case tag; vertices are named by their images in
    the unit triangle (a -> origin, b -> right, c -> top).
    """
    fwd = map_to_unit(tri)
    back = invert(fwd)
    query = point_slope.PointSlopeQuery(
        apply_point(fwd, as_point(p)), apply_slope(fwd, slope)
    )
    outcome = point_slope.solve_point_slope_unit(query, tol)
    if isinstance(outcome, point_slope.NoSolution):
        return SolveReport(case=f"no_solution:{outcome.vertex.value}", solutions=())
    residuals = point_slope.residual_system13(query.p, query.slope, outcome)
    return SolveReport(case="unique", solutions=(_to_world(outcome, back, residuals),))


def solve_tangency(
    tri: Triangle, q1: Point, q2: Point, tol: Tolerances = DEFAULT_TOL
) -> SolveReport:
    """The unique inscribed ellipse tangent to ``tri`` at two boundary points."""
    fwd = map_to_unit(tri)
    back = invert(fwd)
    s1 = boundary.side_point(apply_point(fwd, as_point(q1)), tol)
    s2 = boundary.side_point(apply_point(fwd, as_point(q2)), tol)
    param = boundary.param_from_tangencies(s1, s2, tol)
    tps = tangency_points(param)
    produced = {
        boundary.Side.BOTTOM: tps.t1,
        boundary.Side.LEFT: tps.t2,
        boundary.Side.HYPOTENUSE: tps.t3,
    }
    residuals = tuple(
        max(abs(produced[s.side].x - s.point.x), abs(produced[s.side].y - s.point.y))
        for s in (s1, s2)
    )
    return SolveReport(case="boundary_unique", solutions=(_to_world(param, back, residuals),))
