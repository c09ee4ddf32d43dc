"""Static SVG figures: triangle, solution ellipses, marked points.

Ellipses are sampled from their center / principal-axis form: the quadratic
part is diagonalized, semi-axes follow from the value of the form at the
center, and the boundary is traced with a fixed number of samples.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

import numpy as np

from .affine import Triangle
from .conic import ConicCoeffs
from .errors import NotAnEllipse
from .geom import Point

_SAMPLES = 256
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def ellipse_geometry(conic: ConicCoeffs):
    """(center, axis matrix with unit columns, semi-axis lengths) of an ellipse."""
    a, b, c, d, e, f = conic
    m2 = np.array([[a, c], [c, b]], dtype=float)
    det = a * b - c * c
    if det <= 0.0:
        raise NotAnEllipse("quadratic part is not definite")
    center = np.linalg.solve(2.0 * m2, [-d, -e])
    value = center @ m2 @ center + d * center[0] + e * center[1] + f
    eigvals, eigvecs = np.linalg.eigh(m2)
    radii2 = -value / eigvals
    if np.any(radii2 <= 0.0):
        raise NotAnEllipse("no real points on the conic")
    return Point(*center), eigvecs, np.sqrt(radii2)


def sample_ellipse(conic: ConicCoeffs, n: int = _SAMPLES) -> np.ndarray:
    center, axes, radii = ellipse_geometry(conic)
    theta = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    uv = np.stack([radii[0] * np.cos(theta), radii[1] * np.sin(theta)])
    pts = (axes @ uv).T + np.array(center)
    return pts


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def render_svg(
    tri: Triangle,
    ellipses: list[ConicCoeffs],
    query_points: list[Point],
    tangent_points: list[Point],
) -> str:
    """An SVG 1.1 document: three triangle edges, one path per ellipse, dots."""
    xs = [p.x for p in tri.vertices]
    ys = [p.y for p in tri.vertices]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    pad = 0.08 * span
    width = max(xs) - min(xs) + 2 * pad
    height = max(ys) - min(ys) + 2 * pad
    flip = max(ys) + pad  # mirror y so the figure reads in math orientation

    def xy(p):
        return _fmt(p[0]), _fmt(flip - p[1])

    stroke = _fmt(0.004 * span)
    dot = _fmt(0.012 * span)

    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        viewBox=f"{_fmt(min(xs) - pad)} 0 {_fmt(width)} {_fmt(height)}",
    )
    verts = tri.vertices
    for i in range(3):
        (x1, y1), (x2, y2) = xy(verts[i]), xy(verts[(i + 1) % 3])
        ET.SubElement(
            svg, "line",
            x1=x1, y1=y1, x2=x2, y2=y2,
            stroke="#333333", fill="none", attrib={"stroke-width": stroke},
        )
    for k, conic in enumerate(ellipses):
        pts = sample_ellipse(conic)
        parts = []
        for i, p in enumerate(pts):
            x, y = xy(p)
            parts.append(f"{'M' if i == 0 else 'L'} {x} {y}")
        parts.append("Z")
        ET.SubElement(
            svg, "path",
            d=" ".join(parts),
            stroke=_PALETTE[k % len(_PALETTE)], fill="none",
            attrib={"stroke-width": stroke},
        )
    for p in tangent_points:
        x, y = xy(p)
        ET.SubElement(svg, "circle", cx=x, cy=y, r=dot, fill="#2ca02c")
    for p in query_points:
        x, y = xy(p)
        ET.SubElement(svg, "circle", cx=x, cy=y, r=dot, fill="#000000")
    return ET.tostring(svg, encoding="unicode", xml_declaration=True)
