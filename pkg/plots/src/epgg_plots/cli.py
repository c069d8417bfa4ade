"""Command-line front end.

    plots curves --in DIR [DIR ...] --out FILE.png [--f 0.5 1 ...] [--smooth N]
    plots tables --in DIR [DIR ...] --out FILE.md

``curves`` reads one series.csv per input directory; ``tables`` collects
every summary.csv found directly in or one level under each input
directory.  Exit codes: 0 success (including a partial table, with the
missing conditions listed on stderr), 1 runtime failure, 2 bad input
(schema mismatches name the offending column).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .curves import FigureSpec, render_curves
from .io import SchemaError
from .tables import render_tables


def curves_command(args: argparse.Namespace) -> int:
    spec = FigureSpec(
        series_paths=tuple(args.in_dirs),
        out_path=args.out,
        panel_f=tuple(args.f) if args.f else None,
        smooth=args.smooth,
    )
    finals = render_curves(spec)
    for f, per_label in finals.items():
        for label, value in per_label.items():
            print(f"f={f:g} {label}: final {value:.2f}")
    return 0


def _summary_paths(in_dirs: list[str]) -> list[Path]:
    paths: list[Path] = []
    for raw in in_dirs:
        p = Path(raw)
        if p.is_file():
            paths.append(p)
        elif (p / "summary.csv").exists():
            paths.append(p / "summary.csv")
        else:
            found = sorted(p.glob("*/summary.csv"))
            paths.extend(found if found else [p / "summary.csv"])
    return paths


def tables_command(args: argparse.Namespace) -> int:
    result = render_tables(_summary_paths(args.in_dirs), args.out)
    for name in result.missing:
        print(f"missing condition: {name}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plots", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    cur = sub.add_parser("curves", help="render cooperation curves to an image")
    cur.add_argument("--in", required=True, dest="in_dirs", nargs="+",
                     help="directories holding series.csv (one line per directory)")
    cur.add_argument("--out", required=True, help="output image path")
    cur.add_argument("--f", type=float, nargs="+",
                     help="factors to panel (default: all present)")
    cur.add_argument("--smooth", type=int, help="moving-average window in epochs")
    cur.set_defaults(func=curves_command)

    tab = sub.add_parser("tables", help="render summary tables to markdown")
    tab.add_argument("--in", required=True, dest="in_dirs", nargs="+",
                     help="directories holding summary.csv files (directly or per condition)")
    tab.add_argument("--out", required=True, help="output markdown path")
    tab.set_defaults(func=tables_command)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # runtime failure
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
