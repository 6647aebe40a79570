"""Command-line interface.

Subcommands: construct, verify, approx, limit.  Exit codes form a stable
contract: 0 success, 2 usage or parse error, 3 geometric degeneracy,
4 verification failure (the report is still emitted).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

import numpy as np

from .approx import ApproxProblem, optimal_knots, quadrature_l1, \
    quadrature_l2, total_error_objective
from .equidistant import EquidistantConfig, IndexOutOfRange, InvalidConfig, \
    associated_parabola, equidistant_from_frame, frame_from_certificate, \
    make_equidistant, midpoint_parabola, verify_archimedes, verify_isogonal, \
    verify_lambert, verify_optical, verify_parallel_chords
from .kernel import DEFAULT_TOLERANCE, GeometryError, Point, Tolerance
from .limits import convergence_table, observed_orders
from .report import CheckResult, VerificationReport
from .scene import SceneDocument, SceneFormatError, parse_feet_spec, \
    parse_line_spec, parse_point_spec
from .simson import Polygon, characterization_defect, \
    construct_simson_polygon, find_simson_point
from .svgfig import approx_figure, scene_to_svg

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_VERIFY = 4

_EQUIDISTANT_CHECKS = ("parallel-chords", "optical", "archimedes")
ALL_CHECKS = ("simson", "parallel-chords", "isogonal", "optical",
              "archimedes", "lambert")


class _CliError(Exception):
    """Usage-level problem detected after argparse."""


def _tolerance(args) -> Tolerance:
    if args.tolerance is None:
        return DEFAULT_TOLERANCE
    if args.tolerance <= 0.0:
        raise _CliError("--tolerance must be positive")
    return Tolerance(abs_eps=args.tolerance, rel_eps=args.tolerance)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    elif not args.quiet:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _write_svg(args, svg: str) -> None:
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)


# ---------------------------------------------------------------- construct

def _construct_scene(args, tol: Tolerance) -> SceneDocument:
    scene = SceneDocument()
    if args.equidistant:
        for flag, value in (("--s", args.s), ("--delta", args.delta),
                            ("--n", args.n)):
            if value is None:
                raise _CliError(f"--equidistant requires {flag}")
        cfg = EquidistantConfig(s=args.s, x0=args.x0, delta=args.delta,
                                n=args.n)
        poly = make_equidistant(cfg)
        scene.add_line("L", poly.simson_line)
        scene.add_parabola("C", associated_parabola(cfg), dash="4 3")
        scene.add_parabola("Cprime", midpoint_parabola(cfg), dash="2 3",
                           stroke="#777777")
        scene.add_polygon("polygon", poly.polygon())
        for i, foot in enumerate(poly.projections):
            scene.add_point(f"X{i + 1}", foot, fill="#808080")
        scene.add_point("S", poly.simson_point, fill="#b03030")
        return scene
    for flag, value in (("--feet", args.feet),
                        ("--simson-point", args.simson_point),
                        ("--simson-line", args.simson_line)):
        if value is None:
            raise _CliError(f"construct without --equidistant requires {flag}")
    feet = parse_feet_spec(args.feet)
    s = parse_point_spec(args.simson_point)
    line = parse_line_spec(args.simson_line)
    poly = construct_simson_polygon(s, line, feet, tol=tol)
    scene.add_line("L", line)
    scene.add_polygon("polygon", poly)
    for i, foot in enumerate(feet):
        scene.add_point(f"X{i + 1}", foot, fill="#808080")
    scene.add_point("S", s, fill="#b03030")
    return scene


def cmd_construct(args) -> int:
    tol = _tolerance(args)
    scene = _construct_scene(args, tol)
    _emit(args, scene.to_json())
    _write_svg(args, scene_to_svg(scene))
    return EXIT_OK


# ------------------------------------------------------------------- verify

def _parse_checks(spec: str) -> list[str]:
    names = [c.strip() for c in spec.split(",") if c.strip()]
    if not names:
        raise _CliError("--checks must name at least one check")
    if "all" in names:
        return list(ALL_CHECKS)
    for name in names:
        if name not in ALL_CHECKS:
            raise _CliError(
                f"unknown check {name!r}; choose from "
                f"{', '.join(ALL_CHECKS)} or all")
    return names


def _parse_triple(spec: str) -> tuple[int, int, int]:
    parts = spec.split(",")
    if len(parts) != 3:
        raise _CliError("--triple expects three comma-separated side indices")
    try:
        i, j, k = (int(p) for p in parts)
    except ValueError:
        raise _CliError(f"--triple indices must be integers, got {spec!r}")
    return i, j, k


def _load_polygon(args) -> Polygon:
    if args.infile is None:
        raise _CliError("verify requires --in SCENE.json")
    if args.infile == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.infile, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _CliError(f"cannot read {args.infile}: {exc.strerror}")
    return SceneDocument.from_json(text).first_polygon()


def _perturbed(poly: Polygon, eps: float, seed: int) -> Polygon:
    rng = np.random.default_rng(seed)
    offsets = rng.uniform(-eps, eps, size=(poly.n, 2))
    return Polygon(tuple(Point(v.x + dx, v.y + dy)
                         for v, (dx, dy) in zip(poly.vertices, offsets)))


def _run_checks(poly: Polygon, checks: list[str], triple: tuple[int, int, int],
                tol: Tolerance) -> VerificationReport:
    report = VerificationReport()
    report.tolerances = {"abs_eps": tol.abs_eps, "rel_eps": tol.rel_eps}
    cert = find_simson_point(poly, tol)
    if cert is None:
        defect = characterization_defect(poly, tol)
        if "simson" in checks:
            report.add(CheckResult(
                "simson", (), defect, False,
                note="no common intersection of characterization circles"))
        for name in checks:
            if name != "simson":
                report.add(CheckResult(name, (), defect, False,
                                       note="skipped: no simson point"))
        return report
    if "simson" in checks:
        report.add(CheckResult("simson", (), cert.residual, True))
    frame = frame_from_certificate(poly, cert)
    if "isogonal" in checks:
        report.extend(verify_isogonal(frame, tol))
    if "lambert" in checks:
        report.extend(verify_lambert(frame, *triple, tol=tol))
    wanted = [c for c in checks if c in _EQUIDISTANT_CHECKS]
    if wanted:
        try:
            eq = equidistant_from_frame(frame, tol)
        except InvalidConfig as exc:
            report.add(CheckResult("equidistant-spacing", (), float("inf"),
                                   False, note=str(exc)))
            return report
        if "parallel-chords" in wanted:
            report.extend(verify_parallel_chords(eq, tol))
        if "optical" in wanted:
            report.extend(verify_optical(eq, tol))
        if "archimedes" in wanted:
            if eq.n < 5:
                report.add(CheckResult("archimedes", (), 0.0, True,
                                       note="skipped: needs n >= 5"))
            else:
                report.extend(verify_archimedes(eq, tol))
    return report


def cmd_verify(args) -> int:
    tol = _tolerance(args)
    checks = _parse_checks(args.checks)
    triple = _parse_triple(args.triple)
    poly = _load_polygon(args)
    if args.negative_control:
        poly = _perturbed(poly, args.perturb, args.seed)
    report = _run_checks(poly, checks, triple, tol)
    _emit(args, json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.overall else EXIT_VERIFY


# ------------------------------------------------------------------- approx

def _parse_perturb_knot(spec: str) -> tuple[int, float]:
    parts = spec.split(",")
    if len(parts) != 2:
        raise _CliError("--perturb-knot expects INDEX,EPS")
    try:
        return int(parts[0]), float(parts[1])
    except ValueError:
        raise _CliError(f"bad --perturb-knot value {spec!r}")


def cmd_approx(args) -> int:
    if args.a >= args.b:
        raise _CliError(f"need a < b, got a={args.a}, b={args.b}")
    if args.n < 1:
        raise _CliError("--n must be at least 1")
    problem = ApproxProblem(s=args.s, delta=args.delta, a=args.a, b=args.b,
                            n=args.n)
    result = optimal_knots(problem)
    payload = {
        "s": problem.s, "delta": problem.delta,
        "a": problem.a, "b": problem.b, "n": problem.n,
        "knots": list(result.knots),
        "knot_points": [[x, y] for x, y in result.knot_points],
        "l1_error": result.l1_error,
        "l2_error": result.l2_error,
    }
    exit_code = EXIT_OK
    if args.compare_quadrature:
        q1 = quadrature_l1(problem, result.knots)
        q2 = quadrature_l2(problem, result.knots)
        payload["quadrature"] = {
            "l1": q1,
            "l1_relative_difference": abs(q1 - result.l1_error)
            / max(result.l1_error, 1e-300),
            "l2": q2,
            "l2_relative_difference": abs(q2 - result.l2_error)
            / max(result.l2_error, 1e-300),
        }
    if args.perturb_knot:
        idx, eps = _parse_perturb_knot(args.perturb_knot)
        if not 1 <= idx <= problem.n - 1:
            raise _CliError(
                f"--perturb-knot index must be interior (1..{problem.n - 1})")
        interior = list(result.knots[1:-1])
        moved = list(interior)
        moved[idx - 1] += eps
        delta_obj = (total_error_objective(problem, moved)
                     - total_error_objective(problem, interior))
        payload["perturb_knot"] = {"index": idx, "eps": eps,
                                   "objective_delta": delta_obj}
        if delta_obj <= 0.0:
            exit_code = EXIT_VERIFY
    _emit(args, json.dumps(payload, indent=2))
    _write_svg(args, approx_figure(problem, result))
    return exit_code


# -------------------------------------------------------------------- limit

def cmd_limit(args) -> int:
    if args.window <= 0.0:
        raise _CliError("--window must be positive")
    if args.m_max < 0:
        raise _CliError("--m-max must be >= 0")
    rows = convergence_table(args.s, args.window, args.m_max)
    orders = observed_orders(rows)
    payload = {
        "s": args.s, "window": args.window,
        "rows": [{"delta": r.delta, "hausdorff": r.hausdorff,
                  "bound": r.bound} for r in rows],
        "observed_orders": orders,
    }
    exit_code = EXIT_OK
    if args.m_max > 0:
        order_ok = min(orders) >= 1.9
        payload["order_ok"] = order_ok
        if not order_ok:
            exit_code = EXIT_VERIFY
    _emit(args, json.dumps(payload, indent=2))
    return exit_code


# ----------------------------------------------------------------- plumbing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=None,
                        help="absolute and relative epsilon (default 1e-9)")
    common.add_argument("--out", default=None, metavar="FILE",
                        help="write JSON output here instead of stdout")
    common.add_argument("--svg", default=None, metavar="FILE",
                        help="also write an SVG figure")
    common.add_argument("--in", dest="infile", default=None, metavar="FILE",
                        help="input scene JSON ('-' for stdin)")
    common.add_argument("--quiet", action="store_true",
                        help="suppress stdout output")

    parser = argparse.ArgumentParser(
        prog="simsonpoly",
        description="Construct, verify, and approximate Simson polygons.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_con = sub.add_parser("construct", parents=[common],
                           help="build a Simson polygon scene")
    p_con.add_argument("--equidistant", action="store_true",
                       help="use the equidistant closed form")
    p_con.add_argument("--s", type=float, help="Simson point height")
    p_con.add_argument("--delta", type=float, help="foot spacing")
    p_con.add_argument("--n", type=int, help="number of sides")
    p_con.add_argument("--x0", type=float, default=0.0,
                       help="first foot abscissa (default 0)")
    p_con.add_argument("--feet", help="feet as 'x,y;x,y;...'")
    p_con.add_argument("--simson-point", help="point as 'x,y'")
    p_con.add_argument("--simson-line", help="line as 'ax+by+c=0' or 'y=mx+k'")
    p_con.set_defaults(func=cmd_construct)

    p_ver = sub.add_parser("verify", parents=[common],
                           help="check scene polygon against the theorems")
    p_ver.add_argument("--checks", default="all",
                       help="comma list from {%s} or all" % ", ".join(ALL_CHECKS))
    p_ver.add_argument("--triple", default="1,2,3",
                       help="side indices i,j,k for the lambert check")
    p_ver.add_argument("--negative-control", action="store_true",
                       help="perturb vertices before checking")
    p_ver.add_argument("--perturb", type=float, default=1e-3,
                       help="perturbation size for --negative-control")
    p_ver.add_argument("--seed", type=int, default=0,
                       help="seed for --negative-control noise")
    p_ver.set_defaults(func=cmd_verify)

    p_app = sub.add_parser("approx", parents=[common],
                           help="optimal piecewise-linear approximation")
    p_app.add_argument("--s", type=float, required=True)
    p_app.add_argument("--a", type=float, required=True)
    p_app.add_argument("--b", type=float, required=True)
    p_app.add_argument("--n", type=int, required=True,
                       help="number of segments")
    p_app.add_argument("--delta", type=float, default=0.0)
    p_app.add_argument("--compare-quadrature", action="store_true",
                       help="also integrate the error numerically")
    p_app.add_argument("--perturb-knot", default=None, metavar="INDEX,EPS",
                       help="report the objective change of a knot nudge")
    p_app.set_defaults(func=cmd_approx)

    p_lim = sub.add_parser("limit", parents=[common],
                           help="convergence of the chain to the parabola")
    p_lim.add_argument("--s", type=float, required=True)
    p_lim.add_argument("--window", type=float, default=4.0,
                       help="half-width of the sampled window")
    p_lim.add_argument("--m-max", type=int, default=6,
                       help="number of times delta = 1 is halved")
    p_lim.set_defaults(func=cmd_limit)
    return parser


# Flags whose values may start with "-" (e.g. --feet "-1,0;0,0;1,0"),
# which argparse would otherwise read as an option string.
_DASH_VALUE_FLAGS = ("--feet", "--simson-point", "--simson-line",
                     "--perturb-knot", "--triple")


def _glue_dash_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if (tok in _DASH_VALUE_FLAGS and len(nxt) > 1
                and nxt[0] == "-" and nxt[1] in "0123456789.xy"):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    raw = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_glue_dash_values(raw))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SceneFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IndexOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
