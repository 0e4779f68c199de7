"""Command line front end: exact JSON reports and SVG illustrations.

All reported numbers stay exact: rationals are emitted as [numerator,
denominator] pairs and lexicographic scalars as two such pairs.  The SVG
renderer is the only place floating point appears, and only for display
coordinates.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import convexity, folding, galleries, model_space, tree, verification
from .errors import BudgetExceeded, InputError, WeylfoldError
from .rootsystem import build_root_system
from .scalars import LexPair, vec_zero

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERDICT = 2
EXIT_BUDGET = 3


def encode(value):
    """Exact JSON encoding for scalars, points and containers."""
    if isinstance(value, Fraction):
        return [value.numerator, value.denominator]
    if isinstance(value, LexPair):
        return [encode(value.a), encode(value.b)]
    if isinstance(value, bool) or isinstance(value, (int, str)) or value is None:
        return value
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [encode(v) for v in items]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    return str(value)


def parse_point(text, rank):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != rank:
        raise InputError(f"expected {rank} comma-separated rationals, got {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad point literal {text!r}: {exc}") from None


def parse_word(text):
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise InputError(f"bad word literal {text!r}: {exc}") from None


def emit(payload):
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    json.dump(encode(payload), sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _embedding(rs):
    """Euclidean display coordinates of the simple roots (rank 2 only)."""
    if rs.rank != 2:
        raise InputError("SVG rendering is available for rank 2 only")
    n1 = math.sqrt(float(rs.norm2(rs.simple_roots[0])))
    n2 = math.sqrt(float(rs.norm2(rs.simple_roots[1])))
    dot = float(rs.gram[0][1])
    cos = dot / (n1 * n2)
    sin = math.sqrt(max(0.0, 1.0 - cos * cos))
    return ((n1, 0.0), (n2 * cos, n2 * sin))


def render_svg(rs, stage_paths, labels):
    """Byte-stable SVG 1.1 picture of the folding stages."""
    e1, e2 = _embedding(rs)

    def xy(point):
        a, b = float(point[0]), float(point[1])
        return (a * e1[0] + b * e2[0], a * e1[1] + b * e2[1])

    pts = [xy(p) for path in stage_paths for _, p in path.breakpoints]
    pts += [xy(r) for r in rs.roots]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    pad = 0.6
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    scale = 420.0 / max(x1 - x0, y1 - y0)

    def pix(p):
        return ((p[0] - x0) * scale + 20.0, (y1 - p[1]) * scale + 20.0)

    def fmt(v):
        return f"{v:.4f}"

    width = fmt((x1 - x0) * scale + 40.0)
    height = fmt((y1 - y0) * scale + 40.0)
    colors = ("#bbbbbb", "#7799dd", "#44aa77", "#dd8833", "#cc3344", "#8844bb")
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}">',
    ]
    origin = pix(xy((0, 0)))
    for root in rs.roots:
        tip = pix(xy(root))
        lines.append(
            f'<line x1="{fmt(origin[0])}" y1="{fmt(origin[1])}" '
            f'x2="{fmt(tip[0])}" y2="{fmt(tip[1])}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
    for idx, path in enumerate(stage_paths):
        coords = " ".join(
            f"{fmt(px)},{fmt(py)}"
            for px, py in (pix(xy(p)) for _, p in path.breakpoints)
        )
        color = colors[idx % len(colors)]
        lines.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            'stroke-width="2"/>'
        )
        end = pix(xy(path.endpoint()))
        lines.append(
            f'<circle cx="{fmt(end[0])}" cy="{fmt(end[1])}" r="3" '
            f'fill="{color}"/>'
        )
        lines.append(
            f'<text x="{fmt(end[0] + 5.0)}" y="{fmt(end[1] - 5.0)}" '
            f'font-size="11" fill="{color}">{labels[idx]}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_orbit(args):
    rs = build_root_system(args.type)
    point = parse_point(args.point, rs.rank)
    emit({
        "system": rs.to_json(),
        "point": point,
        "orbit": sorted(rs.weyl_orbit(point)),
    })
    return EXIT_OK


def cmd_hull(args):
    rs = build_root_system(args.type)
    point = parse_point(args.point, rs.rank)
    hull = convexity.hull_of_orbit(rs, point)
    payload = {
        "system": args.type,
        "point": point,
        "dominant": hull.x_plus,
        "halfspaces": [
            {"vector": hs.vector, "bound": hs.bound} for hs in hull.halfspaces
        ],
    }
    if args.lattice:
        lattice = model_space.TranslationLattice(rs, args.lattice)
        payload["lattice"] = args.lattice
        payload["lattice_points"] = sorted(
            convexity.lattice_points(hull, lattice, vec_zero(rs.rank))
        )
    emit(payload)
    return EXIT_OK


def cmd_distance(args):
    rs = build_root_system(args.type)
    x = parse_point(args.x, rs.rank)
    y = parse_point(args.y, rs.rank)
    emit({
        "system": args.type,
        "x": x,
        "y": y,
        "distance": model_space.distance(rs, x, y),
    })
    return EXIT_OK


def cmd_fold(args):
    rs = build_root_system(args.type)
    x = parse_point(args.x, rs.rank)
    y = parse_point(args.y, rs.rank)
    word = parse_word(args.word) if args.word else None
    schedule, stages = folding.positive_fold_stages(rs, x, y, word)
    if args.svg:
        labels = ["geodesic"] + [
            f"stage {k + 1}" for k in range(len(stages) - 1)
        ]
        with open(args.svg, "w", encoding="utf-8") as handle:
            handle.write(render_svg(rs, stages, labels))
    emit({
        "system": args.type,
        "x": x,
        "y": y,
        "word": list(schedule.word),
        "steps": schedule.steps,
        "points": schedule.points,
        "path": stages[-1].to_json(),
    })
    return EXIT_OK


def cmd_galleries(args):
    rs = build_root_system(args.type)
    x = parse_point(args.x, rs.rank)
    report = galleries.verify_simplicial_convexity(
        rs, x, budget=int(float(args.budget))
    )
    emit({"system": args.type, "x": x, **report})
    return EXIT_OK if report["verdict"] else EXIT_VERDICT


def cmd_tree(args):
    step = Fraction(args.step)
    if args.scalars == "lex":
        step = LexPair(step, 0)
    t = tree.build_tree(step, args.depth * step, args.seed, thick=not args.thin)
    report = tree.verify_tree_theorem(t, args.x * step)
    emit({
        "step": step,
        "depth": args.depth,
        "seed": args.seed,
        "scalars": args.scalars,
        "branch_count": len(t.branches),
        **report,
    })
    return EXIT_OK if report["verdict"] else EXIT_VERDICT


def cmd_plot(args):
    rs = build_root_system(args.type)
    x = parse_point(args.x, rs.rank)
    y = parse_point(args.y, rs.rank)
    word = parse_word(args.word) if args.word else None
    schedule, stages = folding.positive_fold_stages(rs, x, y, word)
    labels = ["geodesic"] + [f"stage {k + 1}" for k in range(len(stages) - 1)]
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(render_svg(rs, stages, labels))
    emit({
        "system": args.type,
        "out": args.out,
        "stages": len(stages),
        "steps": schedule.steps,
    })
    return EXIT_OK


def cmd_verify_all(args):
    report = verification.run_all(quick=args.quick)
    emit(report)
    return EXIT_OK if report["passed"] else EXIT_VERDICT


def build_parser():
    parser = argparse.ArgumentParser(
        prog="weylfold",
        description="Exact arithmetic for Weyl group convexity, folded "
        "galleries and Lambda-trees",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_type(p):
        p.add_argument("--type", required=True, help="root system label, e.g. A2")

    p = sub.add_parser("orbit", help="Weyl orbit of a point")
    with_type(p)
    p.add_argument("--point", required=True)
    p.set_defaults(fn=cmd_orbit)

    p = sub.add_parser("hull", help="dual half-space hull of an orbit")
    with_type(p)
    p.add_argument("--point", required=True)
    p.add_argument("--lattice", choices=["coroot", "root"])
    p.set_defaults(fn=cmd_hull)

    p = sub.add_parser("distance", help="exact vectorial distance")
    with_type(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(fn=cmd_distance)

    p = sub.add_parser("fold", help="maximal fold schedule and folded path")
    with_type(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--word", help="reduced w0 word, e.g. 1,2,1")
    p.add_argument("--svg", help="write the folding stages to an SVG file")
    p.set_defaults(fn=cmd_fold)

    p = sub.add_parser("galleries", help="positively folded gallery targets")
    with_type(p)
    p.add_argument("--x", required=True)
    p.add_argument("--budget", default="1e7")
    p.set_defaults(fn=cmd_galleries)

    p = sub.add_parser("tree", help="rank-1 thick tree theorem check")
    p.add_argument("--step", default="1")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--x", type=int, required=True, help="multiple of the step")
    p.add_argument("--scalars", choices=["rational", "lex"], default="rational")
    p.add_argument("--thin", action="store_true", help="build without branches")
    p.set_defaults(fn=cmd_tree)

    p = sub.add_parser("plot", help="SVG of the folding stages (rank 2)")
    with_type(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--word")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_plot)

    p = sub.add_parser("verify-all", help="run every acceptance criterion")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(fn=cmd_verify_all)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, OSError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except WeylfoldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERDICT


if __name__ == "__main__":
    sys.exit(main())
