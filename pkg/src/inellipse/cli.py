"""Command-line front end: JSON query in, canonical JSON report out.

Subcommands ``two-points``, ``point-slope``, ``tangency`` each read a query
document (positional file path, or ``-`` for stdin)::

    {
      "triangle": [[0,0], [1,0], [0,1]],
      "query": {"two_points": {"p1": [0.25, 0.125], "p2": [0.5, 0.1667]}},
      "options": {"tolerance": 1e-9, "grid_n": 256, "svg": "out.svg"}
    }

Exactly one of ``two_points`` / ``point_slope`` / ``boundary_tangency`` must
be present and must match the subcommand.  ``point_slope.slope`` is a number
or the string ``"vertical"``.  Reported coefficients are in world
coordinates, ordered [A, B, 2C, D, E, F] with the full (printed) xy
coefficient, normalized so the largest-magnitude entry is +-1 unless
``--raw``.  Exit codes: 0 solved, 2 a certified no-solution outcome, 1 input
error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import oracle, svgfig, world
from .affine import Triangle, map_to_unit, apply_point
from .config import DEFAULT_TOL
from .errors import GeometryError
from .geom import Point, Slope, as_point
from .conic import full_coefficients

_DEFAULT_GRID = 256


def _canonical(obj) -> str:
    """Deterministic JSON: sorted keys, floats printed with 17 significant digits."""
    out: list[str] = []
    _write(obj, out)
    return "".join(out)


def _write(obj, out: list[str]) -> None:
    if isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj)):
            if i:
                out.append(",")
            out.append(json.dumps(key))
            out.append(":")
            _write(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(",")
            _write(item, out)
        out.append("]")
    elif isinstance(obj, bool) or obj is None:
        out.append(json.dumps(obj))
    elif isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError("non-finite float in report")
        out.append(format(obj + 0.0 if obj != 0.0 else 0.0, ".17g"))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


class InputError(Exception):
    pass


def _load_document(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("query document must be a JSON object")
    return doc


def _parse_triangle(doc) -> Triangle:
    tri = doc.get("triangle")
    if not (isinstance(tri, list) and len(tri) == 3):
        raise InputError("'triangle' must list three vertices")
    try:
        return Triangle(*(as_point(v) for v in tri))
    except (TypeError, ValueError, IndexError) as exc:
        raise InputError(f"bad triangle: {exc}") from exc


_VARIANTS = ("two_points", "point_slope", "boundary_tangency")


def _parse_query(doc, expected: str):
    query = doc.get("query")
    if not isinstance(query, dict):
        raise InputError("'query' must be an object")
    present = [v for v in _VARIANTS if v in query]
    if len(present) != 1:
        raise InputError(f"exactly one of {_VARIANTS} must be present, got {present}")
    if present[0] != expected:
        raise InputError(f"subcommand expects '{expected}', document has '{present[0]}'")
    return query[expected]


def _parse_slope(raw) -> Slope:
    if raw == "vertical":
        return Slope.vertical()
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        return Slope.finite(float(raw))
    raise InputError("'slope' must be a number or the string \"vertical\"")


def _point_field(obj, key) -> Point:
    try:
        return as_point(obj[key])
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"bad point '{key}': {exc}") from exc


def _solution_dict(sol: world.WorldSolution, raw: bool) -> dict:
    coeffs = list(full_coefficients(sol.conic))
    if not raw:
        pivot = max(coeffs, key=abs)
        coeffs = [v / pivot for v in coeffs]
    return {
        "w": sol.param.w,
        "t": sol.param.t,
        "coefficients": coeffs,
        "tangent_points": [[p.x, p.y] for p in sol.tangent_points],
        "center": [sol.center.x, sol.center.y],
        "residuals": list(sol.residuals),
    }


def _oracle_check(kind: str, tri: Triangle, args_ns, payload, report, grid_n: int) -> dict:
    fwd = map_to_unit(tri)
    solved = [(s.param.w, s.param.t) for s in report.solutions]
    if kind == "boundary_tangency":
        cert = oracle.verify_inscribed(report.solutions[0].conic, tri)
        return {
            "method": "tangency_certificate",
            "passed": cert.passed,
            "side_residuals": [s.residual for s in cert.sides],
        }
    if kind == "two_points":
        u1 = apply_point(fwd, _point_field(payload, "p1"))
        u2 = apply_point(fwd, _point_field(payload, "p2"))
        basins = oracle.brute_force_two_points(u1, u2, grid_n)
    else:
        u = apply_point(fwd, _point_field(payload, "p"))
        from .affine import apply_slope

        basins = oracle.brute_force_point_slope(
            u, apply_slope(fwd, _parse_slope(payload.get("slope"))), grid_n
        )
    deviation = 0.0
    matched = len(basins) == len(solved)
    if matched and basins:
        for (bw, bt), (sw, st) in zip(basins, sorted(solved, key=lambda p: (p[1], p[0]))):
            deviation = max(deviation, abs(bw - sw), abs(bt - st))
        matched = deviation < 1e-6
    return {
        "method": "grid_newton",
        "grid_n": grid_n,
        "params": [[w, t] for w, t in basins],
        "count_match": matched,
        "max_param_deviation": deviation,
    }


def run(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="inellipse",
        description="Ellipses inscribed in a triangle through prescribed data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("two-points", "point-slope", "tangency"):
        s = sub.add_parser(name)
        s.add_argument("input", help="query document path, or - for stdin")
        s.add_argument("--svg", metavar="PATH", help="also write an SVG figure")
        s.add_argument("--check", action="store_true", help="embed an oracle comparison")
        s.add_argument("--grid", type=int, default=None, help="oracle grid size (default 256)")
        s.add_argument("--tol", type=float, default=None, help="residual tolerance (default 1e-9)")
        s.add_argument("--raw", action="store_true", help="emit unnormalized coefficients")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0

    kind = {"two-points": "two_points", "point-slope": "point_slope", "tangency": "boundary_tangency"}[
        args.command
    ]
    try:
        doc = _load_document(args.input)
        tri = _parse_triangle(doc)
        payload = _parse_query(doc, kind)
        options = doc.get("options") or {}
        if not isinstance(options, dict):
            raise InputError("'options' must be an object")

        tol_value = args.tol if args.tol is not None else options.get("tolerance")
        tol = DEFAULT_TOL if tol_value is None else DEFAULT_TOL.with_residual(float(tol_value))
        grid_n = args.grid if args.grid is not None else int(options.get("grid_n", _DEFAULT_GRID))
        svg_path = args.svg if args.svg is not None else options.get("svg")

        if kind == "two_points":
            p1, p2 = _point_field(payload, "p1"), _point_field(payload, "p2")
            report = world.solve_two_points(tri, p1, p2, tol)
            markers = [p1, p2]
        elif kind == "point_slope":
            p = _point_field(payload, "p")
            report = world.solve_point_slope(tri, p, _parse_slope(payload.get("slope")), tol)
            markers = [p]
        else:
            q1, q2 = _point_field(payload, "p1"), _point_field(payload, "p2")
            report = world.solve_tangency(tri, q1, q2, tol)
            markers = [q1, q2]
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    out = {
        "case": report.case,
        "ellipses": [_solution_dict(s, args.raw) for s in report.solutions],
    }
    if args.check:
        out["oracle_check"] = _oracle_check(kind, tri, args, payload, report, grid_n)
    print(_canonical(out))

    if svg_path:
        tangent_points = [p for s in report.solutions for p in s.tangent_points]
        text = svgfig.render_svg(tri, [s.conic for s in report.solutions], markers, tangent_points)
        with open(svg_path, "w", encoding="utf-8") as fh:
            fh.write(text)

    return 2 if report.case.startswith("no_solution") else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
