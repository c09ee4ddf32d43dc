"""Affine maps between an arbitrary triangle and the unit triangle.

Every solver works on the unit triangle; this module supplies the conjugation:
``map_to_unit`` sends the user's triangle onto it, points and slopes travel
through ``apply_point`` / ``apply_slope``, and conic transport lives in
:mod:`inellipse.conic`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateTriangle, SingularMap
from .geom import Point, Slope, as_point

_COLLINEAR_BAND = 1e-12
_SINGULAR_BAND = 1e-14


@dataclass(frozen=True)
class Triangle:
    """Three non-collinear vertices, in user order."""

    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        object.__setattr__(self, "a", as_point(self.a))
        object.__setattr__(self, "b", as_point(self.b))
        object.__setattr__(self, "c", as_point(self.c))
        scale = max(
            abs(v) for p in (self.a, self.b, self.c) for v in p
        )
        scale = max(scale, 1.0)
        if abs(self.signed_area2()) <= _COLLINEAR_BAND * scale * scale:
            raise DegenerateTriangle(f"collinear vertices {self.a}, {self.b}, {self.c}")

    def signed_area2(self) -> float:
        """Twice the signed area."""
        ax, ay = self.a
        return (self.b.x - ax) * (self.c.y - ay) - (self.c.x - ax) * (self.b.y - ay)

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)


UNIT_TRIANGLE = Triangle(Point(0.0, 0.0), Point(1.0, 0.0), Point(0.0, 1.0))


@dataclass(frozen=True)
class AffineMap:
    """p -> (m11*x + m12*y + tx, m21*x + m22*y + ty)."""

    m11: float
    m12: float
    m21: float
    m22: float
    tx: float = 0.0
    ty: float = 0.0

    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    def _require_invertible(self) -> float:
        d = self.det()
        scale = max(abs(self.m11), abs(self.m12), abs(self.m21), abs(self.m22), 1e-300)
        if abs(d) <= _SINGULAR_BAND * scale * scale:
            raise SingularMap(f"linear part of {self} is singular")
        return d


IDENTITY_MAP = AffineMap(1.0, 0.0, 0.0, 1.0)


def apply_point(m: AffineMap, p: Point) -> Point:
    return Point(m.m11 * p.x + m.m12 * p.y + m.tx, m.m21 * p.x + m.m22 * p.y + m.ty)


def invert(m: AffineMap) -> AffineMap:
    d = m._require_invertible()
    i11, i12 = m.m22 / d, -m.m12 / d
    i21, i22 = -m.m21 / d, m.m11 / d
    return AffineMap(i11, i12, i21, i22, -(i11 * m.tx + i12 * m.ty), -(i21 * m.tx + i22 * m.ty))


def compose(outer: AffineMap, inner: AffineMap) -> AffineMap:
    """Map equal to applying ``inner`` first, then ``outer``."""
    return AffineMap(
        outer.m11 * inner.m11 + outer.m12 * inner.m21,
        outer.m11 * inner.m12 + outer.m12 * inner.m22,
        outer.m21 * inner.m11 + outer.m22 * inner.m21,
        outer.m21 * inner.m12 + outer.m22 * inner.m22,
        outer.m11 * inner.tx + outer.m12 * inner.ty + outer.tx,
        outer.m21 * inner.tx + outer.m22 * inner.ty + outer.ty,
    )


def apply_slope(m: AffineMap, s: Slope) -> Slope:
    """Transport a tangent direction through the linear part.

    A finite slope r rides on the direction (1, r); vertical rides on (0, 1).
    The image direction (dx, dy) yields dy/dx, or vertical when dx vanishes.
    """
    m._require_invertible()
    if s.is_vertical:
        dx, dy = m.m12, m.m22
    else:
        dx = m.m11 + m.m12 * s.value
        dy = m.m21 + m.m22 * s.value
    scale = max(abs(m.m11), abs(m.m12), abs(m.m21), abs(m.m22)) * max(
        1.0, abs(s.value) if s.value is not None else 1.0
    )
    if abs(dx) <= 1e-14 * scale:
        return Slope.vertical()
    return Slope.finite(dy / dx)


def map_to_unit(tri: Triangle) -> AffineMap:
    """The unique affine map sending a->(0,0), b->(1,0), c->(0,1)."""
    ux, uy = tri.b.x - tri.a.x, tri.b.y - tri.a.y
    vx, vy = tri.c.x - tri.a.x, tri.c.y - tri.a.y
    d = ux * vy - vx * uy
    # Triangle.__post_init__ already guards |d|; recompute the inverse of the
    # column matrix [u v] directly.
    m11, m12 = vy / d, -vx / d
    m21, m22 = -uy / d, ux / d
    return AffineMap(
        m11, m12, m21, m22,
        -(m11 * tri.a.x + m12 * tri.a.y),
        -(m21 * tri.a.x + m22 * tri.a.y),
    )
