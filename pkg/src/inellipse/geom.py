"""Primitive value types: points and tangent slopes.

The canonical domain is the unit triangle with vertices (0,0), (1,0), (0,1);
general triangles are reduced to it by an affine map.  Points are plain
(x, y) named tuples.  A slope is a tagged value: either a finite number or
the vertical direction -- never an infinity encoded as a huge float.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple, Optional

from .errors import CoincidentPoints, NotInterior


class Point(NamedTuple):
    x: float
    y: float


class Vertex(Enum):
    """The three vertices of the unit triangle, by position."""

    ORIGIN = "origin"
    RIGHT = "right"
    TOP = "top"

    @property
    def point(self) -> "Point":
        return _VERTEX_POINTS[self]


class Slope(NamedTuple):
    """Tangent direction: ``value`` is the finite slope, or None for vertical."""

    value: Optional[float]

    @staticmethod
    def finite(r: float) -> "Slope":
        r = float(r)
        if not math.isfinite(r):
            raise ValueError("finite slope required; use Slope.vertical()")
        return Slope(r)

    @staticmethod
    def vertical() -> "Slope":
        return Slope(None)

    @property
    def is_vertical(self) -> bool:
        return self.value is None


_VERTEX_POINTS = {
    Vertex.ORIGIN: Point(0.0, 0.0),
    Vertex.RIGHT: Point(1.0, 0.0),
    Vertex.TOP: Point(0.0, 1.0),
}


def as_point(obj) -> Point:
    """Coerce a 2-sequence into a finite-coordinate Point."""
    x, y = float(obj[0]), float(obj[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"point coordinates must be finite, got {(x, y)}")
    return Point(x, y)


def in_unit_interior(p: Point) -> bool:
    """Strict membership in the open unit triangle 0<x, 0<y, x+y<1."""
    return 0.0 < p.x and 0.0 < p.y and p.x + p.y < 1.0


def require_interior(*points: Point) -> None:
    for p in points:
        if not in_unit_interior(p):
            raise NotInterior(f"point {tuple(p)} is not interior to the unit triangle")


def require_distinct(p1: Point, p2: Point, band: float = 1e-14) -> None:
    scale = max(abs(p1.x), abs(p1.y), abs(p2.x), abs(p2.y), 1e-300)
    if max(abs(p1.x - p2.x), abs(p1.y - p2.y)) <= band * scale:
        raise CoincidentPoints(f"points {tuple(p1)} and {tuple(p2)} coincide")
