"""Readers for the experiment CSV schemas.

Two file kinds are understood:

* ``series.csv``: header ``run,epoch,f,cooperation``, one row per
  (run, epoch, factor) evaluation sample.
* ``summary.csv``: header ``condition,f,mean,std``, one row per
  (condition, factor) final-cooperation summary.

Any deviation from the documented schema raises :class:`SchemaError`
naming the offending column, so callers can fail with a precise message
rather than a stack trace.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

SERIES_HEADER = ("run", "epoch", "f", "cooperation")
SUMMARY_HEADER = ("condition", "f", "mean", "std")


class SchemaError(Exception):
    """An input file does not match its documented schema.

    ``column`` names the offending column (header name where the header is
    wrong, field name where a value is malformed).
    """

    def __init__(self, path: Path, column: str, detail: str):
        self.path = Path(path)
        self.column = column
        super().__init__(f"{path}: column {column!r}: {detail}")


def _check_header(path: Path, got: list[str] | None, want: tuple[str, ...]) -> None:
    if got is None:
        raise SchemaError(path, want[0], "file is empty, expected a header row")
    for i, name in enumerate(want):
        if i >= len(got) or got[i] != name:
            found = got[i] if i < len(got) else "nothing"
            raise SchemaError(path, name, f"expected header column {i} to be {name!r}, found {found!r}")
    if len(got) > len(want):
        raise SchemaError(path, got[len(want)], "unexpected extra column")


def _parse(path: Path, row_no: int, column: str, text: str, kind):
    try:
        return kind(text)
    except ValueError:
        raise SchemaError(
            path, column, f"row {row_no}: expected {kind.__name__}, got {text!r}"
        ) from None


def read_series(path: str | Path) -> dict[float, np.ndarray]:
    """Parse a series.csv into ``{f: (runs, epochs) cooperation array}``.

    Factors come out sorted; runs and epochs are ordered by their indices.
    Cooperation values must lie in [0, 1].
    """
    path = Path(path)
    if path.is_dir():
        path = path / "series.csv"
    if not path.exists():
        raise SchemaError(path, "run", "file not found")
    cells: dict[float, dict[int, dict[int, float]]] = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        _check_header(path, next(reader, None), SERIES_HEADER)
        for row_no, row in enumerate(reader, start=2):
            if len(row) != len(SERIES_HEADER):
                raise SchemaError(
                    path, SERIES_HEADER[min(len(row), 3)],
                    f"row {row_no}: expected {len(SERIES_HEADER)} fields, got {len(row)}",
                )
            run = _parse(path, row_no, "run", row[0], int)
            epoch = _parse(path, row_no, "epoch", row[1], int)
            f = _parse(path, row_no, "f", row[2], float)
            coop = _parse(path, row_no, "cooperation", row[3], float)
            if not 0.0 <= coop <= 1.0:
                raise SchemaError(
                    path, "cooperation", f"row {row_no}: {coop} outside [0, 1]"
                )
            cells.setdefault(f, {}).setdefault(run, {})[epoch] = coop
    if not cells:
        raise SchemaError(path, "run", "no data rows")
    out: dict[float, np.ndarray] = {}
    for f in sorted(cells):
        runs = sorted(cells[f])
        epochs = sorted(cells[f][runs[0]])
        try:
            out[f] = np.array(
                [[cells[f][r][e] for e in epochs] for r in runs], dtype=np.float64
            )
        except KeyError as exc:
            raise SchemaError(
                path, "epoch", f"run/epoch grid is ragged at f={f:g}: missing {exc}"
            ) from None
    return out


def read_summary(path: str | Path) -> list[tuple[str, float, float, float]]:
    """Parse a summary.csv into ``[(condition, f, mean, std), ...]`` rows."""
    path = Path(path)
    if path.is_dir():
        path = path / "summary.csv"
    if not path.exists():
        raise SchemaError(path, "condition", "file not found")
    rows: list[tuple[str, float, float, float]] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        _check_header(path, next(reader, None), SUMMARY_HEADER)
        for row_no, row in enumerate(reader, start=2):
            if len(row) != len(SUMMARY_HEADER):
                raise SchemaError(
                    path, SUMMARY_HEADER[min(len(row), 3)],
                    f"row {row_no}: expected {len(SUMMARY_HEADER)} fields, got {len(row)}",
                )
            rows.append((
                row[0],
                _parse(path, row_no, "f", row[1], float),
                _parse(path, row_no, "mean", row[2], float),
                _parse(path, row_no, "std", row[3], float),
            ))
    if not rows:
        raise SchemaError(path, "condition", "no data rows")
    return rows
