import numpy as np
import pytest

from epgg_plots.curves import FigureSpec, render_curves

from conftest import write_series


def test_constant_series_renders_flat_line_with_empty_band(tmp_path):
    # one run of constant 1.0: mean sits at 1.0 everywhere, std is zero
    path = write_series(tmp_path / "flat" / "series.csv", {1.0: np.ones((2, 40))})
    out = tmp_path / "fig.png"
    finals = render_curves(FigureSpec(series_paths=(path,), out_path=out))
    assert out.exists()
    assert finals[1.0]["flat"] == pytest.approx(1.0)


def test_two_run_series_draws_the_hand_computed_average(tmp_path):
    # runs at constant 0.2 and 0.4 average to a line at 0.3
    values = np.vstack([np.full(60, 0.2), np.full(60, 0.4)])
    path = write_series(tmp_path / "cond" / "series.csv", {1.5: values})
    finals = render_curves(
        FigureSpec(series_paths=(path,), out_path=tmp_path / "fig.png")
    )
    assert finals[1.5]["cond"] == pytest.approx(0.3)


def test_one_panel_per_factor_in_sorted_order(tmp_path):
    series = {f: np.full((1, 10), 0.5) for f in (3.5, 0.5, 1.5, 1.0)}
    path = write_series(tmp_path / "series.csv", series)
    finals = render_curves(
        FigureSpec(series_paths=(path,), out_path=tmp_path / "fig.png")
    )
    assert list(finals) == [0.5, 1.0, 1.5, 3.5]


def test_final_annotation_averages_last_fifty_epochs(tmp_path):
    # 100 epochs: first half at 0.0, last half at 1.0; the last-50 mean is 1.0
    values = np.concatenate([np.zeros((1, 50)), np.ones((1, 50))], axis=1)
    path = write_series(tmp_path / "step" / "series.csv", {2.0: values})
    finals = render_curves(
        FigureSpec(series_paths=(path,), out_path=tmp_path / "fig.png")
    )
    assert finals[2.0]["step"] == pytest.approx(1.0)


def test_rendering_is_deterministic(tmp_path):
    rng = np.random.default_rng(3)
    path = write_series(
        tmp_path / "series.csv", {1.0: rng.uniform(size=(3, 30))}
    )
    out_a, out_b = tmp_path / "a.png", tmp_path / "b.png"
    render_curves(FigureSpec(series_paths=(path,), out_path=out_a))
    render_curves(FigureSpec(series_paths=(path,), out_path=out_b))
    assert out_a.read_bytes() == out_b.read_bytes()


def test_multiple_series_overlay_with_labels(tmp_path):
    a = write_series(tmp_path / "cond-a" / "series.csv", {1.0: np.full((1, 20), 0.2)})
    b = write_series(tmp_path / "cond-b" / "series.csv", {1.0: np.full((1, 20), 0.8)})
    finals = render_curves(
        FigureSpec(series_paths=(a, b), out_path=tmp_path / "fig.png")
    )
    assert finals[1.0] == {"cond-a": pytest.approx(0.2), "cond-b": pytest.approx(0.8)}


def test_smoothing_keeps_curve_length_and_final_value(tmp_path):
    values = np.tile(np.linspace(0.0, 1.0, 80), (2, 1))
    path = write_series(tmp_path / "ramp" / "series.csv", {1.0: values})
    plain = render_curves(
        FigureSpec(series_paths=(path,), out_path=tmp_path / "a.png")
    )
    smoothed = render_curves(
        FigureSpec(series_paths=(path,), out_path=tmp_path / "b.png", smooth=10)
    )
    # the displayed final value is computed from the raw series
    assert smoothed[1.0]["ramp"] == plain[1.0]["ramp"]


def test_requested_factor_missing_from_series_fails(tmp_path):
    path = write_series(tmp_path / "series.csv", {1.0: np.ones((1, 5))})
    with pytest.raises(ValueError, match="f=2"):
        render_curves(
            FigureSpec(series_paths=(path,), out_path=tmp_path / "fig.png",
                       panel_f=(2.0,))
        )
