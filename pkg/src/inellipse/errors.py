"""Exception types shared across the package.

Everything derives from :class:`GeometryError` (a ``ValueError``), so callers
can catch the whole family with one clause while tests pin the exact type.
"""


class GeometryError(ValueError):
    """Base class for every geometric contract violation."""


class OutOfDomain(GeometryError):
    """Ellipse parameters fell outside the open unit square (0,1)x(0,1)."""


class NotInterior(GeometryError):
    """A query point is not strictly inside the triangle."""


class CoincidentPoints(GeometryError):
    """Two points that must be distinct coincide (within tolerance)."""


class DegenerateConic(GeometryError):
    """The conic has no unique center (vanishing quadratic-part determinant)."""


class SingularPoint(GeometryError):
    """Both gradient components vanish at the point; no tangent direction."""


class SingularMap(GeometryError):
    """The affine map has a (numerically) singular linear part."""


class DegenerateTriangle(GeometryError):
    """Triangle vertices are collinear within tolerance."""


class SameSide(GeometryError):
    """Two prescribed tangency points lie on the same triangle side."""


class NotOnSide(GeometryError):
    """A prescribed tangency point does not lie on any side of the triangle."""


class VertexPoint(GeometryError):
    """A prescribed tangency point coincides with a triangle vertex."""


class AmbiguousClassification(GeometryError):
    """Two vertex-line determinants vanish at once; input or tolerance is bad."""


class SolutionCountMismatch(GeometryError):
    """The filtered solution count differs from the theoretical count."""


class ZeroPolynomial(GeometryError):
    """All polynomial coefficients vanish; roots are undefined."""


class NotAnEllipse(GeometryError):
    """A conic expected to be a real ellipse fails the ellipse test."""


class NoConvergence(GeometryError):
    """A numerical refinement failed to converge (recorded per basin)."""
