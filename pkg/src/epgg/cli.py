"""Command-line front end: presets, config files, CSV emission, comparisons.

Subcommands:

    epgg run      train one condition and write series.csv + summary.csv
    epgg compare  Welch-test two conditions' series files into ttest.csv
    epgg tables   assemble the steering-grid series into a wide CSV

Config files are flat ``key = value`` text (``#`` comments allowed) over the
ExperimentConfig field names; CLI flags override file values.  All CSVs use
6-significant-digit numbers, a header row, and LF line endings.  The env var
EPGG_OUT_DIR supplies a default for --out.  Exit codes: 0 success, 1 runtime
failure, 2 bad flags or config.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
from dataclasses import fields
from pathlib import Path

import numpy as np

from .sim import (
    EVAL_FACTORS_DEFAULT,
    ExperimentConfig,
    FRange,
    InvalidConfigError,
    preset_config,
    run_experiment,
)
from .stats import welch_t_test

_BOOL_FIELDS = {"reputation_enabled", "intrinsic_enabled", "eval_noise", "eval_all_pairs"}
_INT_FIELDS = {"pool_size", "epochs", "rounds", "runs", "master_seed"}
_STR_FIELDS = {"algo"}
_SEQ_FIELDS = {"training_f", "eval_f"}


def _num(x: float) -> str:
    """CSV numeric format: 6 significant digits."""
    return f"{x:.6g}"


def config_to_text(config: ExperimentConfig) -> str:
    """Serialize a config as flat key = value lines (lossless round-trip)."""
    lines = []
    for fld in fields(config):
        value = getattr(config, fld.name)
        if fld.name == "training_f" and isinstance(value, FRange):
            text = f"{value.lo!r}:{value.hi!r}"
        elif fld.name in _SEQ_FIELDS:
            text = ",".join(repr(float(v)) for v in value)
        elif fld.name in _BOOL_FIELDS:
            text = "on" if value else "off"
        elif fld.name in _STR_FIELDS:
            text = value
        elif fld.name in _INT_FIELDS:
            text = str(value)
        else:
            text = repr(float(value))
        lines.append(f"{fld.name} = {text}")
    return "\n".join(lines) + "\n"


def config_from_text(text: str) -> ExperimentConfig:
    """Parse the flat key = value format back into a config."""
    known = {fld.name for fld in fields(ExperimentConfig)}
    kwargs: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in known:
            raise InvalidConfigError(f"line {lineno}: unknown config key {key!r}")
        try:
            kwargs[key] = _parse_value(key, value)
        except InvalidConfigError:
            raise
        except ValueError as exc:
            raise InvalidConfigError(f"line {lineno}: bad value for {key}: {exc}") from None
    return ExperimentConfig(**kwargs)


def _parse_value(key: str, value: str):
    if key in _BOOL_FIELDS:
        lowered = value.lower()
        if lowered in ("on", "true", "1", "yes"):
            return True
        if lowered in ("off", "false", "0", "no"):
            return False
        raise InvalidConfigError(f"expected on/off, got {value!r}")
    if key in _INT_FIELDS:
        return int(value)
    if key in _STR_FIELDS:
        return value
    if key == "training_f" and ":" in value:
        lo, _, hi = value.partition(":")
        return FRange(float(lo), float(hi))
    if key in _SEQ_FIELDS:
        return tuple(float(part) for part in value.split(",") if part.strip())
    return float(value)


def _resolve_config(args: argparse.Namespace) -> tuple[str, ExperimentConfig]:
    """Combine preset/config file and flag overrides into one config."""
    if args.preset is not None:
        name = args.preset
        base = preset_config(args.preset)
    elif args.config is not None:
        name = Path(args.config).stem
        base = config_from_text(Path(args.config).read_text())
    else:
        name = "custom"
        base = ExperimentConfig()
    kwargs = {fld.name: getattr(base, fld.name) for fld in fields(base)}
    if args.algo is not None and args.algo != kwargs["algo"]:
        # derived defaults belong to the other learner kind; rebuild them
        kwargs["algo"] = args.algo
        kwargs["training_f"] = None
        kwargs["eps_start"] = None
        kwargs["eps_end"] = None
    overrides = {
        "runs": args.runs,
        "epochs": args.epochs,
        "sigma": args.sigma,
        "beta": args.beta,
        "steering_fraction": args.steering_frac,
        "master_seed": args.seed,
    }
    for key, value in overrides.items():
        if value is not None:
            kwargs[key] = value
    for key, flag in (
        ("reputation_enabled", args.reputation),
        ("intrinsic_enabled", args.intrinsic),
        ("eval_noise", args.eval_noise),
    ):
        if flag is not None:
            kwargs[key] = flag == "on"
    return name, ExperimentConfig(**kwargs)


def _out_dir(args: argparse.Namespace) -> Path:
    out = args.out or os.environ.get("EPGG_OUT_DIR")
    if not out:
        raise InvalidConfigError("no output directory: pass --out or set EPGG_OUT_DIR")
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write_lines(path: Path, lines: list[str]) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def run_command(args: argparse.Namespace) -> int:
    name, config = _resolve_config(args)
    out = _out_dir(args)
    series = run_experiment(config, jobs=args.jobs)

    lines = ["run,epoch,f,cooperation"]
    for run in range(series.eval_coop.shape[0]):
        for epoch in range(series.eval_coop.shape[1]):
            for j, f in enumerate(series.eval_f):
                lines.append(
                    f"{run},{epoch},{_num(f)},{_num(series.eval_coop[run, epoch, j])}"
                )
    _write_lines(out / "series.csv", lines)

    from .stats import summarize

    lines = ["condition,f,mean,std"]
    for f in series.eval_f:
        s = summarize(series, f, last_k=args.last_k)
        lines.append(f"{name},{_num(f)},{_num(s.mean)},{_num(s.std)}")
    _write_lines(out / "summary.csv", lines)

    with open(out / "config.txt", "w", newline="\n") as fh:
        fh.write(config_to_text(config))
    return 0


def _read_series(path: Path) -> tuple[list[float], dict[float, np.ndarray]]:
    """Parse a series.csv into (sorted factors, {f: (runs, epochs) array})."""
    if path.is_dir():
        path = path / "series.csv"
    if not path.exists():
        raise InvalidConfigError(f"series file not found: {path}")
    cells: dict[float, dict[int, dict[int, float]]] = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["run", "epoch", "f", "cooperation"]:
            raise InvalidConfigError(f"{path}: unexpected header {header}")
        for row in reader:
            run, epoch, f, coop = int(row[0]), int(row[1]), float(row[2]), float(row[3])
            cells.setdefault(f, {}).setdefault(run, {})[epoch] = coop
    factors = sorted(cells)
    out: dict[float, np.ndarray] = {}
    for f in factors:
        runs = sorted(cells[f])
        epochs = sorted(cells[f][runs[0]])
        out[f] = np.array(
            [[cells[f][r][e] for e in epochs] for r in runs], dtype=np.float64
        )
    return factors, out


def _last_k_means(values: np.ndarray, last_k: int) -> np.ndarray:
    k = min(last_k, values.shape[1])
    return values[:, -k:].mean(axis=1)


def compare_command(args: argparse.Namespace) -> int:
    out = _out_dir(args)
    f_a, series_a = _read_series(Path(args.a))
    f_b, series_b = _read_series(Path(args.b))
    if [round(f, 9) for f in f_a] != [round(f, 9) for f in f_b]:
        raise InvalidConfigError(
            f"evaluation factors differ: {f_a} vs {f_b}; comparisons need matching grids"
        )
    lines = ["f,t,df,p,significant"]
    for f in f_a:
        xs = _last_k_means(series_a[f], args.last_k)
        ys = _last_k_means(series_b[f], args.last_k)
        if float(np.var(xs, ddof=1)) == 0.0 and float(np.var(ys, ddof=1)) == 0.0:
            # degenerate: identical-variance-free samples; report directly
            if math.isclose(float(xs.mean()), float(ys.mean())):
                t, df, p = 0.0, 0.0, 1.0
            else:
                t = math.inf if xs.mean() > ys.mean() else -math.inf
                df, p = 0.0, 0.0
        else:
            t, df, p = welch_t_test(xs, ys)
        significant = "true" if p < args.threshold else "false"
        lines.append(f"{_num(f)},{_num(t)},{_num(df)},{_num(p)},{significant}")
    _write_lines(out / "ttest.csv", lines)
    return 0


_GRID_FRACTIONS = (0, 30, 50, 70, 90)


def _grid_condition(mech: str, frac: int) -> str:
    name = f"dqn-uncertainty-{mech}"
    return name if frac == 0 else f"{name}-steer{frac}"


def tables_command(args: argparse.Namespace) -> int:
    """Assemble the steering grid (reputation vs reputation+intrinsic, by
    steering fraction) into one wide CSV of mean +/- std entries."""
    out = _out_dir(args)
    in_dir = Path(args.in_dir)
    missing = []
    data: dict[str, tuple[list[float], dict[float, np.ndarray]]] = {}
    for mech in ("reputation", "reputation-intrinsic"):
        for frac in _GRID_FRACTIONS:
            cond = _grid_condition(mech, frac)
            path = in_dir / cond / "series.csv"
            if not path.exists():
                missing.append(cond)
            else:
                data[cond] = _read_series(path)
    if missing:
        raise InvalidConfigError(
            "missing steering-grid conditions under "
            f"{in_dir}: {', '.join(missing)}"
        )
    factors = data[_grid_condition("reputation", 0)][0]
    header = ["f"]
    for group, mech in (("R", "reputation"), ("RI", "reputation-intrinsic")):
        header += [f"{group}_{frac}" for frac in _GRID_FRACTIONS]
    lines = [",".join(header)]
    for f in factors:
        row = [_num(f)]
        for mech in ("reputation", "reputation-intrinsic"):
            for frac in _GRID_FRACTIONS:
                values = data[_grid_condition(mech, frac)][1][f]
                means = _last_k_means(values, args.last_k)
                std = float(np.std(means, ddof=1)) if means.size > 1 else 0.0
                row.append(f"{means.mean():.2f} ± {std:.2f}")
        lines.append(",".join(row))
    _write_lines(out / "steering_table.csv", lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="epgg", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="train one condition and write CSVs")
    source = run_p.add_mutually_exclusive_group()
    source.add_argument("--preset", help="named condition from the preset grid")
    source.add_argument("--config", help="path to a key = value config file")
    run_p.add_argument("--out", help="output directory (default $EPGG_OUT_DIR)")
    run_p.add_argument("--runs", type=int)
    run_p.add_argument("--epochs", type=int)
    run_p.add_argument("--sigma", type=float)
    run_p.add_argument("--beta", type=float)
    run_p.add_argument("--steering-frac", type=float, dest="steering_frac")
    run_p.add_argument("--algo", choices=("tabular", "dqn"))
    run_p.add_argument("--reputation", choices=("on", "off"))
    run_p.add_argument("--intrinsic", choices=("on", "off"))
    run_p.add_argument("--seed", type=int)
    run_p.add_argument("--jobs", type=int, default=1)
    run_p.add_argument("--eval-noise", choices=("on", "off"), dest="eval_noise")
    run_p.add_argument("--last-k", type=int, default=50, dest="last_k")
    run_p.set_defaults(func=run_command)

    cmp_p = sub.add_parser("compare", help="Welch-test two series into ttest.csv")
    cmp_p.add_argument("a", help="series.csv (or its directory) for condition A")
    cmp_p.add_argument("b", help="series.csv (or its directory) for condition B")
    cmp_p.add_argument("--out", help="output directory (default $EPGG_OUT_DIR)")
    cmp_p.add_argument("--threshold", type=float, default=0.0001)
    cmp_p.add_argument("--last-k", type=int, default=50, dest="last_k")
    cmp_p.set_defaults(func=compare_command)

    tab_p = sub.add_parser("tables", help="assemble the steering-grid table")
    tab_p.add_argument("--in", required=True, dest="in_dir",
                       help="directory holding one subdirectory per grid condition")
    tab_p.add_argument("--out", help="output directory (default $EPGG_OUT_DIR)")
    tab_p.add_argument("--last-k", type=int, default=50, dest="last_k")
    tab_p.set_defaults(func=tables_command)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # runtime failure
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
