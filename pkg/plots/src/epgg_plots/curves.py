"""Cooperation-curve figures: one row of panels, one panel per factor.

Each panel plots the per-epoch mean cooperation across runs with a shaded
band of one sample standard deviation (the band semantics are printed on
the figure itself).  Rendering is deterministic: same inputs, same bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import read_series

#: Epochs averaged into the "final" annotation; matches the summary.csv
#: convention of the producing CLI.
FINAL_WINDOW = 50


@dataclass
class FigureSpec:
    """What to draw: which series files, which factors, where to write.

    ``panel_f`` defaults to every factor present in the first series file,
    sorted; ``smooth`` is an optional moving-average window (in epochs)
    applied to the drawn mean and band.
    """

    series_paths: tuple[str | Path, ...]
    out_path: str | Path
    panel_f: tuple[float, ...] | None = None
    smooth: int | None = None


def _label(path: str | Path) -> str:
    p = Path(path)
    if p.is_dir():
        return p.name
    if p.name == "series.csv":
        return p.parent.name
    return p.stem


def _smooth(values: np.ndarray, window: int) -> np.ndarray:
    kernel = np.ones(window) / window
    # pad with edge values so the smoothed curve keeps its length
    padded = np.concatenate([
        np.full(window - 1, values[0]), values,
    ])
    return np.convolve(padded, kernel, mode="valid")


def render_curves(spec: FigureSpec) -> dict[float, dict[str, float]]:
    """Render the figure and return the annotated final values.

    The result maps each panel factor to ``{series label: final value}``,
    where the final value is the mean cooperation over the last
    ``FINAL_WINDOW`` epochs, exactly as displayed on the figure.
    """
    if not spec.series_paths:
        raise ValueError("FigureSpec needs at least one series path")
    if spec.smooth is not None and spec.smooth < 1:
        raise ValueError(f"smoothing window must be >= 1, got {spec.smooth}")
    data = {_label(p): read_series(p) for p in spec.series_paths}

    first = next(iter(data.values()))
    panel_f = spec.panel_f if spec.panel_f is not None else tuple(sorted(first))

    fig, axes = plt.subplots(
        1, len(panel_f), figsize=(3.2 * len(panel_f), 3.0),
        sharey=True, squeeze=False,
    )
    finals: dict[float, dict[str, float]] = {}
    for ax, f in zip(axes[0], panel_f):
        finals[f] = {}
        notes = []
        for label, series in data.items():
            if f not in series:
                raise ValueError(f"{label}: no rows for factor f={f:g}")
            values = series[f]
            mean = values.mean(axis=0)
            std = values.std(axis=0, ddof=1) if values.shape[0] > 1 else np.zeros_like(mean)
            final = float(mean[-min(FINAL_WINDOW, mean.shape[0]):].mean())
            finals[f][label] = final
            if spec.smooth is not None and spec.smooth > 1:
                mean = _smooth(mean, spec.smooth)
                std = _smooth(std, spec.smooth)
            epochs = np.arange(mean.shape[0])
            (line,) = ax.plot(epochs, mean, linewidth=1.0, label=label)
            ax.fill_between(epochs, mean - std, mean + std,
                            color=line.get_color(), alpha=0.25, linewidth=0)
            notes.append(f"final {final:.2f}" if len(data) == 1
                         else f"final {label}: {final:.2f}")
        ax.set_ylim(0.0, 1.0)
        ax.set_title(f"f = {f:g}")
        ax.set_xlabel("epoch")
        ax.text(0.97, 0.03, "\n".join(notes), transform=ax.transAxes,
                ha="right", va="bottom", fontsize=8)
    axes[0][0].set_ylabel("mean cooperation")
    if len(data) > 1:
        axes[0][0].legend(fontsize=8)
    fig.text(0.005, 0.005, "band: mean ± 1 std across runs", fontsize=7)
    fig.tight_layout(rect=(0, 0.03, 1, 1))
    out = Path(spec.out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150, metadata={"Software": "epgg-plots"})
    plt.close(fig)
    return finals
