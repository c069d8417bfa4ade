"""Markdown summary tables in the published row/column structure.

Two layouts, chosen from the condition names found in the inputs:

* plain: one row per factor, one column per condition, in input order.
* steering grid: when the conditions are the reputation / steering sweep
  (names containing ``reputation`` with optional ``-intrinsic`` and
  ``-steerNN`` suffixes), columns become R / RI pairs under each steering
  percentage.

Cells are ``mean ± std`` to two decimals.  Conditions that are expected
but absent leave their cells as ``n/a`` and are reported back to the
caller; the table is still emitted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .io import SchemaError, read_summary

GRID_FRACTIONS = (0, 30, 50, 70, 90)

_GRID_NAME = re.compile(r"^(?P<prefix>.*?)reputation(?P<intr>-intrinsic)?(-steer(?P<frac>\d+))?$")


@dataclass
class TableResult:
    """Rendered markdown plus the conditions that could not be filled in."""

    text: str
    missing: list[str]


def _cell(mean: float, std: float) -> str:
    return f"{mean:.2f} ± {std:.2f}"


def _markdown(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    def line(cells: list[str]) -> str:
        return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"
    sep = "| " + " | ".join("-" * w for w in widths) + " |"
    return "\n".join([line(header), sep, *[line(r) for r in rows]]) + "\n"


def _load(summary_paths) -> tuple[dict[str, dict[float, tuple[float, float]]], list[str]]:
    """Read every summary; unreadable paths become missing conditions."""
    by_condition: dict[str, dict[float, tuple[float, float]]] = {}
    missing: list[str] = []
    for path in summary_paths:
        try:
            rows = read_summary(path)
        except SchemaError as exc:
            if "file not found" in str(exc) or "no data rows" in str(exc):
                missing.append(str(path))
                continue
            raise
        for condition, f, mean, std in rows:
            by_condition.setdefault(condition, {})[f] = (mean, std)
    if not by_condition:
        raise SchemaError(Path(str(summary_paths[0]) if summary_paths else "."),
                          "condition", "no readable summary files")
    return by_condition, missing


def _grid_parse(name: str) -> tuple[str, str, int] | None:
    m = _GRID_NAME.match(name)
    if m is None:
        return None
    mech = "RI" if m.group("intr") else "R"
    frac = int(m.group("frac")) if m.group("frac") else 0
    return m.group("prefix"), mech, frac


def render_tables(summary_paths, out_path: str | Path) -> TableResult:
    """Assemble the summaries under ``summary_paths`` into one markdown table.

    Returns the rendered text and the list of missing conditions (also left
    as ``n/a`` cells).  The file at ``out_path`` is always written.
    """
    by_condition, missing = _load(summary_paths)

    parsed = {name: _grid_parse(name) for name in by_condition}
    grid = sum(p is not None for p in parsed.values()) >= 2
    factors = sorted({f for cells in by_condition.values() for f in cells})

    if grid:
        prefix = next(p[0] for p in parsed.values() if p is not None)
        by_slot = {p[1:]: by_condition[name]
                   for name, p in parsed.items() if p is not None}
        header = ["f"]
        slots = []
        for frac in GRID_FRACTIONS:
            for mech in ("R", "RI"):
                header.append(f"{mech} {frac}%")
                slots.append((mech, frac))
                if (mech, frac) not in by_slot:
                    suffix = "" if frac == 0 else f"-steer{frac}"
                    mech_name = "reputation" if mech == "R" else "reputation-intrinsic"
                    missing.append(f"{prefix}{mech_name}{suffix}")
        rows = []
        for f in factors:
            row = [f"{f:g}"]
            for slot in slots:
                cells = by_slot.get(slot, {})
                row.append(_cell(*cells[f]) if f in cells else "n/a")
            rows.append(row)
    else:
        conditions = list(by_condition)
        header = ["f"] + conditions
        rows = []
        for f in factors:
            row = [f"{f:g}"]
            for name in conditions:
                cells = by_condition[name]
                row.append(_cell(*cells[f]) if f in cells else "n/a")
            rows.append(row)

    text = _markdown(header, rows)
    out = Path(out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    return TableResult(text=text, missing=missing)
