"""Shared fixture helpers: synthesize CSVs in the producing CLI's format."""

from pathlib import Path

import numpy as np
import pytest


def write_series(path: Path, series: dict[float, np.ndarray]) -> Path:
    """Write a series.csv (header run,epoch,f,cooperation) from arrays."""
    lines = ["run,epoch,f,cooperation"]
    factors = sorted(series)
    runs, epochs = series[factors[0]].shape
    for run in range(runs):
        for epoch in range(epochs):
            for f in factors:
                lines.append(f"{run},{epoch},{f:.6g},{series[f][run, epoch]:.6g}")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")
    return path


def write_summary(path: Path, rows: list[tuple[str, float, float, float]]) -> Path:
    """Write a summary.csv (header condition,f,mean,std)."""
    lines = ["condition,f,mean,std"]
    for condition, f, mean, std in rows:
        lines.append(f"{condition},{f:.6g},{mean:.6g},{std:.6g}")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")
    return path


@pytest.fixture
def series_writer():
    return write_series


@pytest.fixture
def summary_writer():
    return write_summary
