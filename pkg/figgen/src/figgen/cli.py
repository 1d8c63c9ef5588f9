"""Command line front ends for the two figure kinds."""

import argparse
import sys

from .figures import FigureSpec, render_plane, render_spin
from .reader import MalformedCsv


def _common(parser):
    parser.add_argument("--output", required=True, help="image file to write")
    parser.add_argument(
        "--title", action="append", default=[], help="panel title, repeatable"
    )
    parser.add_argument(
        "--cols", type=int, default=2, help="panels per row (default 2)"
    )
    parser.add_argument("--dpi", type=int, default=150)


def _layout(count, cols):
    cols = max(1, min(cols, count))
    rows = (count + cols - 1) // cols
    return (rows, cols)


def plane_main(argv=None):
    parser = argparse.ArgumentParser(
        prog="figgen-plane",
        description="Render plane-scan CSV tables as f3 heatmaps.",
    )
    parser.add_argument("csv", nargs="+", help="one plane-scan CSV per panel")
    _common(parser)
    args = parser.parse_args(argv)
    spec = FigureSpec(
        output=args.output,
        layout=_layout(len(args.csv), args.cols),
        titles=tuple(args.title),
        dpi=args.dpi,
    )
    try:
        render_plane(args.csv, spec)
    except (MalformedCsv, ValueError, OSError) as exc:
        print(f"figgen-plane: {exc}", file=sys.stderr)
        return 1
    return 0


def _parse_panel(text):
    # each panel flag looks like "vector=a.csv" or "vector=a.csv,tensor=b.csv"
    panel = []
    for token in text.split(","):
        role, sep, path = token.partition("=")
        if not sep or not path or role not in ("vector", "tensor"):
            raise argparse.ArgumentTypeError(
                f"expected role=path with role vector|tensor, got {token!r}"
            )
        panel.append((path, role))
    return tuple(panel)


def spin_main(argv=None):
    parser = argparse.ArgumentParser(
        prog="figgen-spin",
        description="Render spin-scan CSV tables as measure-vs-angle curves.",
    )
    parser.add_argument(
        "--panel",
        action="append",
        required=True,
        type=_parse_panel,
        help='panel content, e.g. "vector=a.csv,tensor=b.csv"; repeatable',
    )
    _common(parser)
    args = parser.parse_args(argv)
    spec = FigureSpec(
        output=args.output,
        layout=_layout(len(args.panel), args.cols),
        titles=tuple(args.title),
        dpi=args.dpi,
    )
    try:
        render_spin(args.panel, spec)
    except (MalformedCsv, ValueError, OSError) as exc:
        print(f"figgen-spin: {exc}", file=sys.stderr)
        return 1
    return 0


def plane_entry():
    sys.exit(plane_main())


def spin_entry():
    sys.exit(spin_main())
