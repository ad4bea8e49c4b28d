"""Command-line entry point.

Angles are degrees here and radians everywhere else.  Exit status is 0 on
success, 1 on a geometric failure and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import math
import sys

from .constructions import (
    DEG,
    ConverseParameters,
    classic_morley,
    converse_construct,
    dumps,
)
from .errors import GeometryError
from .kernel import triangle_from_angles
from .render import LAYERS, RenderStyle, render_svg
from .solver import SolveRequest, solve
from .verifier import Theorem, TrialPlan, run

ANGLE_SUM_TOL_DEG = 1e-6


def _triple(parser, text, what):
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        parser.error(f"{what}: expected three comma-separated numbers, got {text!r}")
    if len(vals) != 3 or not all(math.isfinite(v) for v in vals):
        parser.error(f"{what}: expected three comma-separated numbers, got {text!r}")
    return vals


def _triangle_angles(parser, text):
    a, b, c = _triple(parser, text, "--angles")
    if min(a, b, c) <= 0:
        parser.error("--angles: every angle must be positive")
    if abs(a + b + c - 180.0) > ANGLE_SUM_TOL_DEG:
        parser.error(f"--angles: angles sum to {a + b + c!r}, not 180")
    alpha, beta = a * DEG, b * DEG
    # the third angle is the exact complement so the radian sum is pi
    return alpha, beta, math.pi - alpha - beta


def _layers(parser, text):
    names = [t for t in text.split(",") if t] if text else []
    bad = [n for n in names if n not in LAYERS]
    if bad:
        parser.error(f"--layers: unknown layer(s) {', '.join(bad)}; choose from {', '.join(LAYERS)}")
    return RenderStyle.with_layers(names)


def _emit(cfg, args, parser):
    style = _layers(parser, args.layers) if args.svg else None
    text = dumps(cfg)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    elif not args.svg:
        sys.stdout.write(text)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_svg(cfg, style))


def _output_flags(p, default_layers):
    p.add_argument("--out", metavar="FILE", help="write the configuration (hex floats)")
    p.add_argument("--svg", metavar="FILE", help="write an SVG figure")
    p.add_argument("--layers", default=default_layers,
                   help=f"comma list of SVG layers from: {', '.join(LAYERS)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="morleykit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a configuration")
    kinds = construct.add_subparsers(dest="kind", required=True)
    morley = kinds.add_parser("morley", help="adjacent-trisector figure of a triangle")
    morley.add_argument("--angles", required=True, metavar="A,B,C")
    _output_flags(morley, "trisectors,labels")
    conv = kinds.add_parser("converse", help="isosceles triangles on an equilateral XYZ")
    conv.add_argument("--apex", required=True, metavar="d,e,f")
    conv.add_argument("--side", type=float, default=1.0, metavar="s")
    _output_flags(conv, "flanks,bisectors,labels")

    slv = sub.add_parser("solve", help="fit a family member to a triangle")
    slv.add_argument("--angles", required=True, metavar="A,B,C")
    mode = slv.add_mutually_exclusive_group(required=True)
    mode.add_argument("--theta", type=float, metavar="T", help="common six-angle value, degrees")
    mode.add_argument("--theorem6", action="store_true",
                      help="BZ, CY meet at the circumcenter of AYZ (and cyclically)")
    _output_flags(slv, "flanks,circumcircles,labels")

    ver = sub.add_parser("verify", help="randomized theorem check")
    ver.add_argument("--theorem", required=True, choices=["t1", "t2", "t3", "t4", "t5", "t6"])
    ver.add_argument("--trials", required=True, type=int)
    ver.add_argument("--seed", required=True, type=int)
    ver.add_argument("--min-angle", type=float, default=5.0, metavar="M", help="degrees")
    ver.add_argument("--report", metavar="FILE")
    ver.add_argument("--dump", metavar="FILE", help="per-trial residuals and configurations")
    ver.add_argument("--workers", type=int, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "construct" and args.kind == "morley":
            cfg = classic_morley(triangle_from_angles(*_triangle_angles(parser, args.angles)))
            _emit(cfg, args, parser)
        elif args.command == "construct":
            d, e, f = _triple(parser, args.apex, "--apex")
            if not args.side > 0:
                parser.error("--side must be positive")
            cfg = converse_construct(ConverseParameters.from_degrees(d, e, f, args.side))
            _emit(cfg, args, parser)
        elif args.command == "solve":
            angles = _triangle_angles(parser, args.angles)
            try:
                req = SolveRequest(angles, theta=None if args.theorem6 else args.theta * DEG,
                                   theorem6=args.theorem6)
            except GeometryError as exc:
                parser.error(str(exc))
            result = solve(req)
            p = result.params
            print(f"apex_deg {p.d / DEG!r} {p.e / DEG!r} {p.f / DEG!r} "
                  f"residual {result.residual!r} iterations {result.iterations}",
                  file=sys.stderr)
            if not result.converged:
                print("error: solver did not converge (best iterate reported above)",
                      file=sys.stderr)
                return 1
            _emit(result.cfg, args, parser)
        else:
            if args.trials < 1:
                parser.error("--trials must be at least 1")
            if not 0 <= args.seed < 2**64:
                parser.error("--seed must be a 64-bit unsigned integer")
            if not 0 < args.min_angle < 60:
                parser.error("--min-angle must lie in (0, 60) degrees")
            plan = TrialPlan(Theorem.parse(args.theorem), args.trials, args.seed,
                             args.min_angle * DEG)
            report = run(plan, workers=args.workers, keep_cfg=bool(args.dump))
            if args.report:
                with open(args.report, "w") as fh:
                    fh.write(report.to_text())
            else:
                sys.stdout.write(report.to_text())
            if args.dump:
                with open(args.dump, "w") as fh:
                    fh.write(report.dump_text())
            print(f"wall_time {report.wall_time:.3f}s", file=sys.stderr)
            failed = report.trials - report.pass_count - report.not_converged
            if failed:
                print(f"error: {failed} trial(s) failed", file=sys.stderr)
                return 1
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
