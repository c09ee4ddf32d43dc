"""Centralized numerical tolerances.

Exact-zero case splits of the underlying theory become tolerance bands in
floating point.  All bands live in one record that is passed explicitly, so a
caller can tighten or relax the whole stack coherently.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Tolerance knobs used throughout the solvers.

    residual          relative residual below which a candidate solution is
                      accepted (term-normalized).
    classify          relative band for the vertex-line determinants.
    j_zero            relative band on the pair invariant that routes a
                      two-point query to the shared-root branch.
    t0_gate           relative band under which the shared-root parameter is
                      reported absent (its denominator vanishes).
    double_root       discriminants below (double_root * coeff_scale)^2 are
                      clamped and solved via the parabola vertex.
    slope_exclusion   |r - vertex slope| < slope_exclusion * (1 + |r|) means
                      the slope aims at a vertex: no solution exists.
    side_membership   absolute band on a side's linear form for classifying
                      boundary points.
    vertex_exclusion  boundary points closer than this to a triangle vertex
                      are rejected.
    scale_equality    relative tolerance for up-to-scale conic comparison.
    coincident        relative band under which two points count as equal.
    """

    residual: float = 1e-9
    classify: float = 1e-10
    j_zero: float = 1e-10
    t0_gate: float = 1e-12
    double_root: float = 1e-8
    slope_exclusion: float = 1e-9
    side_membership: float = 1e-10
    vertex_exclusion: float = 1e-8
    scale_equality: float = 1e-9
    coincident: float = 1e-14

    def with_residual(self, residual: float) -> "Tolerances":
        return replace(self, residual=residual)


DEFAULT_TOL = Tolerances()
