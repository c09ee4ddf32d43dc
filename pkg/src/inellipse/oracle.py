"""Independent numerical verification of the closed-form solvers.

Two facilities:

* :func:`verify_inscribed` certifies tangency of a conic to a triangle by
  restricting the quadratic form to each side and checking that the
  restricted quadratic has a double root strictly inside the segment.

* :func:`brute_force_two_points` / :func:`brute_force_point_slope` locate all
  solutions of the through-point / through-point-with-slope systems by a
  dense residual grid over the parameter square followed by damped Newton
  refinement of every local basin.

This module deliberately never imports the closed-form solver modules; it
evaluates the defining systems from scratch so it can serve as an
independent witness.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .affine import Triangle, UNIT_TRIANGLE
from .conic import ConicCoeffs, is_real_ellipse
from .errors import NotAnEllipse
from .geom import Point, Slope, as_point, require_distinct, require_interior

log = logging.getLogger(__name__)

# Accepted basins must sit at least this far inside the open parameter square.
_INTERIOR_MARGIN = 1e-9
# Honesty gate: a returned parameter pair must satisfy both normalized
# residuals below this bound.
_HONESTY = 1e-12
_DEDUPE = 1e-8
_NEWTON_ITERS = 50
_NEWTON_TARGET = 1e-13


@dataclass(frozen=True)
class SideReport:
    """Tangency certificate for one triangle side."""

    residual: float          # normalized |discriminant| of the restricted quadratic
    contact: Optional[Point]  # double-root location (None if the side is degenerate)
    inside: bool             # contact strictly between the side's endpoints


@dataclass(frozen=True)
class VerificationReport:
    sides: tuple[SideReport, SideReport, SideReport]
    passed: bool


def verify_inscribed(
    conic: ConicCoeffs, tri: Triangle = UNIT_TRIANGLE, tol: float = 1e-9
) -> VerificationReport:
    """Check that an ellipse is tangent to all three sides, from first principles."""
    if not is_real_ellipse(conic):
        raise NotAnEllipse(f"{conic} is not a real ellipse")
    a, b, c, d, e, f = conic
    pivot = max((a, b, c, d, e, f), key=abs)
    a, b, c, d, e, f = (v / pivot for v in (a, b, c, d, e, f))
    if a < 0.0:
        a, b, c, d, e, f = -a, -b, -c, -d, -e, -f

    reports = []
    verts = tri.vertices
    for i in range(3):
        px, py = verts[i]
        qx, qy = verts[(i + 1) % 3]
        dx, dy = qx - px, qy - py
        alpha = a * dx * dx + b * dy * dy + 2.0 * c * dx * dy
        beta = (
            2.0 * a * px * dx + 2.0 * b * py * dy
            + 2.0 * c * (px * dy + py * dx) + d * dx + e * dy
        )
        gamma = a * px * px + b * py * py + 2.0 * c * px * py + d * px + e * py + f
        disc = beta * beta - 4.0 * alpha * gamma
        # Normalize by the squared coefficient size of the restricted
        # quadratic: near-endpoint contacts make beta^2 and 4*alpha*gamma both
        # collapse like s*^2, so dividing by them would amplify round-off.
        denom = max((abs(alpha) + abs(beta) + abs(gamma)) ** 2, 1e-300)
        residual = abs(disc) / denom
        if alpha > 0.0:
            s = -beta / (2.0 * alpha)
            contact = Point(px + s * dx, py + s * dy)
            inside = 0.0 < s < 1.0
        else:
            contact, inside = None, False
        reports.append(SideReport(residual, contact, inside))
    passed = all(r.residual < tol and r.inside for r in reports)
    return VerificationReport(tuple(reports), passed)


# ---------------------------------------------------------------------------
# Residual systems, evaluated directly from the defining equations.
# ---------------------------------------------------------------------------


def _through_point_terms(x, y, w, t):
    """Terms of q(t) w^2 + 2ty((2x-1)t - x) w + t^2 y^2 with magnitudes."""
    q = (1.0 - 4.0 * x * y) * t * t - 2.0 * x * (1.0 - 2.0 * y) * t + x * x
    qmag = abs(1.0 - 4.0 * x * y) * t * t + 2.0 * x * abs(1.0 - 2.0 * y) * t + x * x
    lin = 2.0 * t * y * ((2.0 * x - 1.0) * t - x)
    t1, t2, t3 = q * w * w, lin * w, t * t * y * y
    mag = np.maximum(qmag * w * w, np.maximum(np.abs(lin) * w, t3))
    return t1 + t2 + t3, np.maximum(mag, 1e-300)


def _slope_terms(x, y, r, w, t):
    """Terms of the prescribed-slope equation, finite r."""
    lead = (2.0 * r * t * t - 2.0 * r * t - 1.0) * x + 2.0 * t * (t - 1.0) * y + t
    mid = (2.0 * t - 1.0) * y + r * (2.0 * t - 1.0) * x - r * t
    val = lead * w * w - t * mid * w - r * y * t * t
    magl = (2.0 * abs(r) * (t * t + t) + 1.0) * x + 2.0 * (t * t + t) * y + t
    magm = np.abs(2.0 * t - 1.0) * (y + abs(r) * x) + abs(r) * t
    mag = np.maximum(magl * w * w, np.maximum(magm * t * w, abs(r) * y * t * t))
    return val, np.maximum(mag, 1e-300)


def _vertical_terms(x, y, w, t):
    """Limit of the slope equation as the slope becomes vertical."""
    val = 2.0 * x * (t * t - t) * w * w - (2.0 * t * t * x - t * x - t * t) * w - y * t * t
    mag = np.maximum(
        2.0 * x * (t * t + t) * w * w,
        np.maximum((2.0 * t * t * x + t * x + t * t) * w, y * t * t),
    )
    return val, np.maximum(mag, 1e-300)


def _two_point_residuals(p1, p2, w, t):
    f1, m1 = _through_point_terms(p1.x, p1.y, w, t)
    f2, m2 = _through_point_terms(p2.x, p2.y, w, t)
    return np.abs(f1) / m1, np.abs(f2) / m2


def _point_slope_residuals(p, slope, w, t):
    f1, m1 = _through_point_terms(p.x, p.y, w, t)
    if slope.is_vertical:
        f2, m2 = _vertical_terms(p.x, p.y, w, t)
    else:
        f2, m2 = _slope_terms(p.x, p.y, slope.value, w, t)
    return np.abs(f1) / m1, np.abs(f2) / m2


# ---------------------------------------------------------------------------
# Raw values and Jacobians for Newton refinement.
# ---------------------------------------------------------------------------


def _through_point_fj(x, y, w, t):
    q = (1.0 - 4.0 * x * y) * t * t - 2.0 * x * (1.0 - 2.0 * y) * t + x * x
    dq = 2.0 * (1.0 - 4.0 * x * y) * t - 2.0 * x * (1.0 - 2.0 * y)
    lin = 2.0 * t * y * ((2.0 * x - 1.0) * t - x)
    dlin = 2.0 * y * (2.0 * (2.0 * x - 1.0) * t - x)
    f = q * w * w + lin * w + t * t * y * y
    fw = 2.0 * q * w + lin
    ft = dq * w * w + dlin * w + 2.0 * t * y * y
    return f, fw, ft


def _slope_fj(x, y, r, w, t):
    lead = (2.0 * r * t * t - 2.0 * r * t - 1.0) * x + 2.0 * t * (t - 1.0) * y + t
    dlead = (4.0 * r * t - 2.0 * r) * x + (4.0 * t - 2.0) * y + 1.0
    mid = (2.0 * t - 1.0) * y + r * (2.0 * t - 1.0) * x - r * t
    dmid = 2.0 * y + 2.0 * r * x - r
    f = lead * w * w - t * mid * w - r * y * t * t
    fw = 2.0 * lead * w - t * mid
    ft = dlead * w * w - (mid + t * dmid) * w - 2.0 * r * y * t
    return f, fw, ft


def _vertical_fj(x, y, w, t):
    f = 2.0 * x * (t * t - t) * w * w - (2.0 * t * t * x - t * x - t * t) * w - y * t * t
    fw = 4.0 * x * (t * t - t) * w - (2.0 * t * t * x - t * x - t * t)
    ft = 2.0 * x * (2.0 * t - 1.0) * w * w - (4.0 * t * x - x - 2.0 * t) * w - 2.0 * y * t
    return f, fw, ft


def _newton(residual_fn, fj_fn, w, t):
    """Damped Newton on the raw 2x2 system; returns (w, t) or None."""
    for _ in range(_NEWTON_ITERS):
        r1, r2 = residual_fn(w, t)
        if max(float(r1), float(r2)) < _NEWTON_TARGET:
            return w, t
        (f1, a, b), (f2, c, d) = fj_fn(w, t)
        det = a * d - b * c
        if det == 0.0 or not np.isfinite(det):
            return None
        dw = -(d * f1 - b * f2) / det
        dt = -(a * f2 - c * f1) / det
        base = f1 * f1 + f2 * f2
        lam = 1.0
        for _ in range(30):
            g1 = fj_fn(w + lam * dw, t + lam * dt)[0][0]
            g2 = fj_fn(w + lam * dw, t + lam * dt)[1][0]
            if g1 * g1 + g2 * g2 < base:
                break
            lam *= 0.5
        else:
            return None
        w, t = w + lam * dw, t + lam * dt
        if not (np.isfinite(w) and np.isfinite(t)):
            return None
        if not (-0.5 < w < 1.5 and -0.5 < t < 1.5):
            return None
    r1, r2 = residual_fn(w, t)
    if max(float(r1), float(r2)) < _NEWTON_TARGET:
        return w, t
    return None


def _strict_minima(g):
    """Indices of strict local minima in the 8-neighborhood sense."""
    n, m = g.shape
    padded = np.full((n + 2, m + 2), np.inf)
    padded[1:-1, 1:-1] = g
    mask = np.ones_like(g, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            mask &= g < padded[1 + di : n + 1 + di, 1 + dj : m + 1 + dj]
    return np.argwhere(mask)


_SUBGRID = 24
_STRIP_DEPTH = 16


def _box_minima(residual_fn, w_lo, w_hi, t_lo, t_hi, nw, nt):
    """Strict local minima of the residual on a rectangular sub-grid."""
    ws = w_lo + (np.arange(nw) + 0.5) * (w_hi - w_lo) / nw
    ts = t_lo + (np.arange(nt) + 0.5) * (t_hi - t_lo) / nt
    w_grid, t_grid = np.meshgrid(ws, ts, indexing="ij")
    r1, r2 = residual_fn(w_grid, t_grid)
    g = r1 * r1 + r2 * r2
    return [
        (float(ws[i]), float(ts[j]), float(g[i, j])) for i, j in _strict_minima(g)
    ]


def _run_grid(residual_fn, fj_fn, grid_n):
    axis = (np.arange(grid_n) + 0.5) / grid_n
    w_grid, t_grid = np.meshgrid(axis, axis, indexing="ij")
    r1, r2 = residual_fn(w_grid, t_grid)
    g = r1 * r1 + r2 * r2
    threshold = 10.0 * np.median(g)

    # Newton seeds: each coarse basin center, the minima of a fine sub-grid
    # over its 3x3 neighborhood (one coarse cell can straddle several
    # attractors), and the minima of thin high-resolution strips along the
    # four walls, where solutions of near-degenerate inputs hide between the
    # coarse nodes and the square boundary.
    h = 1.0 / grid_n
    seeds: list[tuple[float, float]] = []
    for i, j in _strict_minima(g):
        if g[i, j] >= threshold:
            continue
        w0, t0 = float(axis[i]), float(axis[j])
        seeds.append((w0, t0))
        seeds.extend(
            (w, t)
            for w, t, _ in _box_minima(
                residual_fn,
                max(w0 - 1.5 * h, 0.0), min(w0 + 1.5 * h, 1.0),
                max(t0 - 1.5 * h, 0.0), min(t0 + 1.5 * h, 1.0),
                _SUBGRID, _SUBGRID,
            )
        )
    band = 3.0 * h
    strips = (
        (0.0, 1.0, 0.0, band, 2 * grid_n, _STRIP_DEPTH),
        (0.0, 1.0, 1.0 - band, 1.0, 2 * grid_n, _STRIP_DEPTH),
        (0.0, band, 0.0, 1.0, _STRIP_DEPTH, 2 * grid_n),
        (1.0 - band, 1.0, 0.0, 1.0, _STRIP_DEPTH, 2 * grid_n),
    )
    for box in strips:
        seeds.extend(
            (w, t) for w, t, val in _box_minima(residual_fn, *box) if val < threshold
        )

    found = []
    for w0, t0 in seeds:
        refined = _newton(residual_fn, fj_fn, w0, t0)
        if refined is None:
            log.debug("seed at (w=%.4f, t=%.4f) did not converge", w0, t0)
            continue
        w, t = refined
        if not (
            _INTERIOR_MARGIN < w < 1.0 - _INTERIOR_MARGIN
            and _INTERIOR_MARGIN < t < 1.0 - _INTERIOR_MARGIN
        ):
            continue
        rr1, rr2 = residual_fn(w, t)
        if max(float(rr1), float(rr2)) > _HONESTY:
            continue
        if any(max(abs(w - u), abs(t - v)) < _DEDUPE for u, v in found):
            continue
        found.append((w, t))
    found.sort(key=lambda wt: (wt[1], wt[0]))
    return found


def brute_force_two_points(p1: Point, p2: Point, grid_n: int = 256) -> list[tuple[float, float]]:
    """All (w, t) solving the two-point system, found by grid + Newton.

    Returns (w, t) pairs sorted by (t, w); every returned pair has both
    normalized residuals below 1e-12.
    """
    p1, p2 = as_point(p1), as_point(p2)
    require_interior(p1, p2)
    require_distinct(p1, p2)
    if grid_n < 64:
        raise ValueError(f"grid_n must be at least 64, got {grid_n}")

    def residuals(w, t):
        return _two_point_residuals(p1, p2, w, t)

    def fj(w, t):
        return (_through_point_fj(p1.x, p1.y, w, t), _through_point_fj(p2.x, p2.y, w, t))

    return _run_grid(residuals, fj, grid_n)


def brute_force_point_slope(
    p: Point, slope: Slope, grid_n: int = 256
) -> list[tuple[float, float]]:
    """All (w, t) solving the point-with-slope system; one off the excluded
    slopes, none on them."""
    p = as_point(p)
    require_interior(p)
    if grid_n < 64:
        raise ValueError(f"grid_n must be at least 64, got {grid_n}")

    def residuals(w, t):
        return _point_slope_residuals(p, slope, w, t)

    if slope.is_vertical:
        def fj(w, t):
            return (_through_point_fj(p.x, p.y, w, t), _vertical_fj(p.x, p.y, w, t))
    else:
        def fj(w, t):
            return (
                _through_point_fj(p.x, p.y, w, t),
                _slope_fj(p.x, p.y, slope.value, w, t),
            )

    return _run_grid(residuals, fj, grid_n)
