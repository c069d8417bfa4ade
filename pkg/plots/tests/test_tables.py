from pathlib import Path

import pytest

from epgg_plots.io import SchemaError
from epgg_plots.tables import render_tables

from conftest import write_summary

FACTORS = (0.5, 1.0, 1.5, 3.5)


def _header(text: str) -> list[str]:
    return [c.strip() for c in text.splitlines()[0].strip("|").split("|")]


def _rows(text: str) -> list[list[str]]:
    return [
        [c.strip() for c in line.strip("|").split("|")]
        for line in text.splitlines()[2:]
    ]


def test_single_condition_gives_one_column(tmp_path):
    path = write_summary(
        tmp_path / "summary.csv",
        [("solo", f, 0.5, 0.1) for f in FACTORS],
    )
    result = render_tables([path], tmp_path / "table.md")
    assert _header(result.text) == ["f", "solo"]
    assert len(_rows(result.text)) == len(FACTORS)
    assert result.missing == []


def test_uncertainty_conditions_shape_rows_by_factor(tmp_path):
    # three-condition comparison: factors down the side, conditions across
    conditions = ["dqn-baseline", "dqn-uncertainty", "dqn-uncertainty-intrinsic"]
    paths = [
        write_summary(
            tmp_path / name / "summary.csv",
            [(name, f, 0.1 * i, 0.01) for f in FACTORS],
        )
        for i, name in enumerate(conditions)
    ]
    result = render_tables(paths, tmp_path / "table.md")
    assert _header(result.text) == ["f"] + conditions
    rows = _rows(result.text)
    assert [r[0] for r in rows] == ["0.5", "1", "1.5", "3.5"]
    assert rows[0][2] == "0.10 ± 0.01"


def test_steering_grid_shapes_mech_fraction_columns(tmp_path):
    paths = []
    for mech in ("reputation", "reputation-intrinsic"):
        for frac in (0, 30, 50, 70, 90):
            name = f"dqn-uncertainty-{mech}" + ("" if frac == 0 else f"-steer{frac}")
            paths.append(
                write_summary(
                    tmp_path / name / "summary.csv",
                    [(name, f, frac / 100, 0.02) for f in FACTORS],
                )
            )
    result = render_tables(paths, tmp_path / "table.md")
    assert _header(result.text) == [
        "f",
        "R 0%", "RI 0%", "R 30%", "RI 30%", "R 50%", "RI 50%",
        "R 70%", "RI 70%", "R 90%", "RI 90%",
    ]
    rows = _rows(result.text)
    assert len(rows) == len(FACTORS)
    assert rows[0][1] == "0.00 ± 0.02"   # R 0%
    assert rows[0][-1] == "0.90 ± 0.02"  # RI 90%
    assert result.missing == []


def test_missing_grid_condition_leaves_partial_table(tmp_path):
    paths = []
    for mech in ("reputation", "reputation-intrinsic"):
        for frac in (0, 30, 50, 70, 90):
            if mech == "reputation" and frac == 50:
                continue
            name = f"dqn-uncertainty-{mech}" + ("" if frac == 0 else f"-steer{frac}")
            paths.append(
                write_summary(
                    tmp_path / name / "summary.csv",
                    [(name, f, 0.5, 0.02) for f in FACTORS],
                )
            )
    out = tmp_path / "table.md"
    result = render_tables(paths, out)
    assert result.missing == ["dqn-uncertainty-reputation-steer50"]
    assert out.exists()
    rows = _rows(result.text)
    column = _header(result.text).index("R 50%")
    assert all(r[column] == "n/a" for r in rows)


def test_unreadable_summary_is_reported_not_fatal(tmp_path):
    good = write_summary(tmp_path / "ok" / "summary.csv", [("ok", 1.0, 0.5, 0.1)])
    bad = tmp_path / "gone" / "summary.csv"
    result = render_tables([good, bad], tmp_path / "table.md")
    assert str(bad) in result.missing
    assert _header(result.text) == ["f", "ok"]


def test_no_readable_summaries_raises(tmp_path):
    with pytest.raises(SchemaError):
        render_tables([tmp_path / "absent.csv"], tmp_path / "table.md")


def test_rendering_is_deterministic(tmp_path):
    path = write_summary(tmp_path / "summary.csv", [("solo", 1.0, 0.25, 0.05)])
    a = render_tables([path], tmp_path / "a.md")
    b = render_tables([path], tmp_path / "b.md")
    assert a.text == b.text
    assert (tmp_path / "a.md").read_text() == (tmp_path / "b.md").read_text()
