"""Command line interface: ``legendrian <command> ...``."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import io
from .circles import Circle, maslov_of_circles
from .core import NotTransverseError
from .curves import circumscribe_polygon, osculating_circle, projected_point_float
from .flags import FlagError, flags_to_polygon, polygon_to_flags, sample_positive_tuple, tuple_positive
from .polygon import (
    LegendrianPolygon,
    PolygonError,
    has_decreasing_curvature,
    homotopy_class,
    is_generic,
    transversality_class,
)
from .render import RenderError, circles_scene, render_polygon, scene_to_svg, translate_frames


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def check_report(P: LegendrianPolygon) -> list[str]:
    cls = transversality_class(P)
    lines = [
        f"vertices: {P.n}",
        f"homotopy class: {homotopy_class(P).value}",
        f"generic: {_yes(is_generic(P))}",
        f"transverse: {cls.value if cls.is_transverse else 'no'}",
    ]
    if cls.is_transverse:
        lines.append(f"decreasing curvature: {_yes(has_decreasing_curvature(P))}")
    else:
        lines.append("decreasing curvature: n/a (not transverse)")
    if P.n % 2 == 0 and P.sign == -1:
        try:
            lines.append(f"positive: {_yes(tuple_positive(polygon_to_flags(P)))}")
        except FlagError as exc:
            lines.append(f"positive: n/a ({exc})")
    else:
        lines.append("positive: n/a (needs an even non-contractible polygon)")
    return lines


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def cmd_check(args) -> int:
    P = io.polygon_from_doc(io.load_file(args.file))
    print("\n".join(check_report(P)))
    return 0


def cmd_sample(args) -> int:
    out = Path(args.out)
    flags = sample_positive_tuple(args.k, args.seed)
    P = flags_to_polygon(flags)
    _write(out / "flags.json", io.dumps(io.flags_to_doc(flags)))
    _write(out / "polygon.json", io.dumps(io.polygon_to_doc(P)))
    _write(out / "polygon.svg", render_polygon(P))
    print(f"wrote {out / 'flags.json'}, {out / 'polygon.json'}, {out / 'polygon.svg'}")
    print("\n".join(check_report(P)))
    return 0


def cmd_translate(args) -> int:
    P = io.polygon_from_doc(io.load_file(args.file))
    out = Path(args.out)
    cls = transversality_class(P)
    _, frames = translate_frames(P, args.r, args.frames)
    width = len(str(len(frames)))
    for i, (r, scene) in enumerate(frames, 1):
        name = out / f"frame_{i:0{width}d}.svg"
        _write(name, scene_to_svg(scene))
        # radial translations are symplectic, so the class cannot change
        print(f"{name}: r = {r}, transverse: {cls.value if cls.is_transverse else 'no'}")
    return 0


def cmd_flags_of(args) -> int:
    P = io.polygon_from_doc(io.load_file(args.file))
    sys.stdout.write(io.dumps(io.flags_to_doc(polygon_to_flags(P))))
    return 0


def cmd_polygon_of(args) -> int:
    flags = io.flags_from_doc(io.load_file(args.file))
    sys.stdout.write(io.dumps(io.polygon_to_doc(flags_to_polygon(flags))))
    return 0


def cmd_maslov(args) -> int:
    circles = io.circles_from_doc(io.load_file(args.file))
    if len(circles) != 3:
        raise io.ParseError(f"expected exactly 3 circles, got {len(circles)}", "$.circles", args.file)
    print(maslov_of_circles(*circles))
    return 0


def cmd_veronese(args) -> int:
    if args.samples < 1:
        raise ValueError("--samples must be positive")
    out = Path(args.out)
    # half of the curve: parameters in (0, 3]
    ts = [Fraction(3 * i, args.samples) for i in range(1, args.samples + 1)]
    scene = circles_scene(c for c in map(osculating_circle, ts) if isinstance(c, Circle))
    scene.curve = [projected_point_float(-3 + 6 * k / 400) for k in range(401)]
    _write(out / "osculating.svg", scene_to_svg(scene))
    k = args.polygon_k
    poly_ts = [Fraction(-3) + Fraction(6 * i, k - 1) for i in range(k)]
    P = circumscribe_polygon(poly_ts).polygon
    _write(out / "polygon.json", io.dumps(io.polygon_to_doc(P)))
    _write(out / "polygon.svg", render_polygon(P))
    print(f"wrote {out / 'osculating.svg'}, {out / 'polygon.json'}, {out / 'polygon.svg'}")
    return 0


def cmd_render(args) -> int:
    P = io.polygon_from_doc(io.load_file(args.file))
    _write(Path(args.out), render_polygon(P))
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="legendrian",
        description="Legendrian polygons in RP^3 and co-oriented piecewise circular curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify a polygon JSON file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sample", help="sample a positive flag tuple and its polygon")
    p.add_argument("--k", type=int, required=True, help="number of flags (>= 3)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("translate", help="render radial translates of a polygon")
    p.add_argument("file")
    p.add_argument("--r", type=Fraction, required=True, help="final radius shift, e.g. -3/2")
    p.add_argument("--frames", type=int, default=1)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("flags-of", help="flag tuple of a polygon (JSON to stdout)")
    p.add_argument("file")
    p.set_defaults(func=cmd_flags_of)

    p = sub.add_parser("polygon-of", help="polygon of a flag tuple (JSON to stdout)")
    p.add_argument("file")
    p.set_defaults(func=cmd_polygon_of)

    p = sub.add_parser("maslov", help="Maslov index of three co-oriented circles")
    p.add_argument("file")
    p.set_defaults(func=cmd_maslov)

    p = sub.add_parser("veronese", help="osculating circles of the Veronese curve")
    p.add_argument("--samples", type=int, default=40)
    p.add_argument("--polygon-k", type=int, default=10, help="flags in the circumscribed polygon")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_veronese)

    p = sub.add_parser("render", help="render a polygon to SVG")
    p.add_argument("file")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.ParseError, PolygonError, FlagError, NotTransverseError, RenderError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
