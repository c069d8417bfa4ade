"""End-to-end command tests, including one against the producing CLI."""

import csv
import shutil
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from epgg_plots.cli import main

from conftest import write_series, write_summary


def test_curves_command_renders_png(tmp_path, capsys):
    write_series(tmp_path / "cond" / "series.csv", {1.0: np.full((2, 30), 0.6)})
    out = tmp_path / "fig.png"
    code = main(["curves", "--in", str(tmp_path / "cond"), "--out", str(out)])
    assert code == 0
    assert out.exists()
    assert "final 0.60" in capsys.readouterr().out


def test_curves_schema_mismatch_exits_nonzero_naming_column(tmp_path, capsys):
    bad = tmp_path / "cond"
    bad.mkdir()
    (bad / "series.csv").write_text("run,epoch,factor,cooperation\n")
    code = main(["curves", "--in", str(bad), "--out", str(tmp_path / "fig.png")])
    assert code == 2
    err = capsys.readouterr().err
    assert "'f'" in err and "factor" in err


def test_tables_command_lists_missing_on_stderr(tmp_path, capsys):
    for mech in ("reputation", "reputation-intrinsic"):
        for frac in (0, 30, 50, 70):  # 90% pair absent
            name = f"dqn-uncertainty-{mech}" + ("" if frac == 0 else f"-steer{frac}")
            write_summary(
                tmp_path / "runs" / name / "summary.csv",
                [(name, f, 0.5, 0.1) for f in (0.5, 1.0)],
            )
    out = tmp_path / "table.md"
    code = main(["tables", "--in", str(tmp_path / "runs"), "--out", str(out)])
    assert code == 0
    err = capsys.readouterr().err
    assert "dqn-uncertainty-reputation-steer90" in err
    assert "dqn-uncertainty-reputation-intrinsic-steer90" in err
    assert "n/a" in out.read_text()


def test_tables_command_empty_input_fails(tmp_path, capsys):
    code = main(["tables", "--in", str(tmp_path), "--out", str(tmp_path / "t.md")])
    assert code == 2


@pytest.mark.skipif(shutil.which("epgg") is None, reason="producing CLI not installed")
def test_displayed_final_matches_produced_summary(tmp_path, capsys):
    # run the producing CLI at desk scale, then check the figure annotation
    # agrees with its summary.csv to two decimals at every factor
    run_dir = tmp_path / "dqn-baseline"
    subprocess.run(
        ["epgg", "run", "--preset", "dqn-baseline", "--runs", "2",
         "--epochs", "300", "--out", str(run_dir)],
        check=True, capture_output=True,
    )
    out = tmp_path / "fig.png"
    code = main(["curves", "--in", str(run_dir), "--out", str(out)])
    assert code == 0
    assert out.exists()

    displayed = {}
    for line in capsys.readouterr().out.splitlines():
        head, _, value = line.partition(": final ")
        displayed[float(head.split("=")[1].split()[0])] = value.strip()
    with open(run_dir / "summary.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4  # one panel per published factor
    for row in rows:
        assert displayed[float(row["f"])] == f"{float(row['mean']):.2f}"
