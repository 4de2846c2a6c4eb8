"""Command-line entry point: ``centroid-bm <command> ...``.

Exit status: 0 on success or pass, 1 when a certificate or check fails,
2 for usage and input errors. Reports are JSON with sorted keys and carry
the tool version plus the parsed configuration, so reruns are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__

log = logging.getLogger("centroid_bm")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _envelope(args: argparse.Namespace, result: dict) -> dict:
    config = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "verbose")}
    return {"tool": {"name": "centroid_bm", "version": __version__}, "config": config, "result": result}


def _fraction(text: str) -> Fraction:
    from .rational import parse

    try:
        return parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


# -- commands -----------------------------------------------------------------


def cmd_certify(args) -> int:
    from .theorem import certify_theorem

    ledger = certify_theorem(args.grid_step, tamper_case1=args.tamper_case1)
    doc = ledger.to_json()
    doc["tool"] = {"name": "centroid_bm", "version": __version__}
    doc["config"] = {"grid_step": str(args.grid_step), "tamper_case1": args.tamper_case1}
    _dump(doc, args.out)
    if ledger.verdict:
        print(f"certify: pass ({len(ledger.entries)} entries)", file=sys.stderr)
        return EXIT_OK
    print(f"certify: FAIL at entry {ledger.first_failure()!r}", file=sys.stderr)
    return EXIT_FAIL


def cmd_replay(args) -> int:
    from .certificate import replay
    from .theorem import replay_ledger

    path = Path(args.path)
    if not path.is_file():
        raise UsageError(f"{path}: no such file")
    text = path.read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: parse error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    result = replay_ledger(doc) if isinstance(doc, dict) and "entries" in doc else replay(doc)
    if result:
        print("replay: pass", file=sys.stderr)
        return EXIT_OK
    print(f"replay: FAIL at {result.location}: {result.message}", file=sys.stderr)
    return EXIT_FAIL


def cmd_distance(args) -> int:
    from .estimator import SearchConfig, estimate_distance
    from .geometry import GeometryError, read_polygon

    try:
        C, D = read_polygon(args.fileC), read_polygon(args.fileD)
    except (OSError, GeometryError) as exc:
        raise UsageError(str(exc)) from None
    cfg = SearchConfig(coarse_grid_steps=args.steps, refinement_rounds=args.rounds, starts=args.starts)
    est = estimate_distance(C, D, cfg)
    _dump(_envelope(args, est.to_json()), args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    from .estimator import grid_oracle_square_triangle
    from .rational import fmt
    from .theorem import RATIO

    try:
        value, tri = grid_oracle_square_triangle(args.grid, args.backend)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = {
        "min_gauge": fmt(value),
        "witness_vertices": [v.to_json() for v in tri.vertices],
        "at_least_5/2": value >= RATIO,
    }
    _dump(_envelope(args, result), args.out)
    return EXIT_OK if value >= RATIO else EXIT_FAIL


def _named_body(name: str):
    from .extensions import affine_regular_hexagon, rational_pentagon
    from .figures import reference_triangle
    from .geometry import SQUARE

    if name == "square":
        return SQUARE
    if name == "hexagon":
        return affine_regular_hexagon()
    if name == "pentagon":
        return rational_pentagon()
    if name == "triangle":
        return reference_triangle()
    if name.startswith("random:"):
        return random_polygon(int(name.split(":", 1)[1]))
    raise UsageError(f"unknown body {name!r}")


def random_polygon(seed: int, points: int = 12):
    """Hull of *points* random grid points in [-1, 1]^2 (pitch 1/100)."""
    from .geometry import Point2, convex_hull

    rng = random.Random(seed)
    pts = [
        Point2(Fraction(rng.randint(-100, 100), 100), Fraction(rng.randint(-100, 100), 100))
        for _ in range(points)
    ]
    return convex_hull(pts)


def _body(args):
    from .geometry import GeometryError, read_polygon

    if args.polygon:
        try:
            return args.polygon, read_polygon(args.polygon)
        except (OSError, GeometryError) as exc:
            raise UsageError(str(exc)) from None
    return args.body, _named_body(args.body)


def cmd_claim(args) -> int:
    from .extensions import scan_report
    from .geometry import GeometryError

    name, body = _body(args)
    try:
        report = scan_report(name, body, args.samples, symmetric=True)
    except GeometryError as exc:
        raise UsageError(str(exc)) from None
    _dump(_envelope(args, report), args.out)
    return EXIT_OK if report["within_bound"] else EXIT_FAIL


def cmd_conjecture(args) -> int:
    from .extensions import scan_report

    name, body = _body(args)
    report = scan_report(name, body, args.samples, symmetric=False)
    _dump(_envelope(args, report), args.out)
    return EXIT_OK if report["within_bound"] else EXIT_FAIL


def cmd_cube_simplex(args) -> int:
    from .extensions import cube_simplex_check

    cert = cube_simplex_check()
    _dump(_envelope(args, cert.to_json()), args.out)
    return EXIT_OK if cert.verdict else EXIT_FAIL


def cmd_figures(args) -> int:
    from .figures import emit_figures

    try:
        paths = emit_figures(args.outdir)
    except OSError as exc:
        raise UsageError(f"cannot write figures: {exc}") from None
    for p in paths:
        print(p)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="centroid-bm", description="Centroid Banach-Mazur distance tools.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="build and check the proof ledger")
    p.add_argument("--out", help="ledger path (default: stdout)")
    p.add_argument("--grid-step", type=_fraction, default=Fraction(1, 64))
    p.add_argument("--tamper-case1", action="store_true", help="weaken a Case 1 threshold (negative control)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("replay", help="re-verify a ledger or single certificate file")
    p.add_argument("path")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("distance", help="estimate the centroid distance of two polygons")
    p.add_argument("fileC")
    p.add_argument("fileD")
    p.add_argument("--steps", type=_positive_int, default=24, help="coarse grid points per parameter")
    p.add_argument("--rounds", type=_positive_int, default=40, help="pattern search rounds")
    p.add_argument("--starts", type=_positive_int, default=12)
    p.add_argument("--out")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("oracle-search", help="exact grid minimum for square and triangle")
    p.add_argument("--grid", type=_positive_int, default=16)
    p.add_argument("--backend", choices=("numba", "numpy"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    for name, func, help_ in (
        ("claim", cmd_claim, "scan inscribed centroid triangles of a symmetric body"),
        ("conjecture", cmd_conjecture, "scan inscribed centroid triangles of any convex body"),
    ):
        p = sub.add_parser(name, help=help_)
        g = p.add_mutually_exclusive_group()
        g.add_argument("--body", default="square", help="square, hexagon, pentagon, triangle or random:SEED")
        g.add_argument("--polygon", help="polygon JSON file")
        p.add_argument("--samples", type=_positive_int, default=200)
        p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("cube-simplex", help="check the cube in 3 times the inscribed simplex")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cube_simplex)

    p = sub.add_parser("figures", help="write the SVG figures")
    p.add_argument("--outdir", default="figures")
    p.set_defaults(func=cmd_figures)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 for --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
