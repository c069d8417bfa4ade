import numpy as np
import pytest

from epgg_plots.io import SchemaError, read_series, read_summary

from conftest import write_series, write_summary


def test_series_round_trip(tmp_path):
    values = {0.5: np.array([[0.0, 0.1], [0.2, 0.3]]), 3.5: np.ones((2, 2))}
    path = write_series(tmp_path / "series.csv", values)
    got = read_series(path)
    assert sorted(got) == [0.5, 3.5]
    np.testing.assert_allclose(got[0.5], values[0.5])
    np.testing.assert_allclose(got[3.5], values[3.5])


def test_series_accepts_directory(tmp_path):
    write_series(tmp_path / "series.csv", {1.0: np.zeros((1, 3))})
    assert 1.0 in read_series(tmp_path)


def test_series_wrong_header_names_column(tmp_path):
    path = tmp_path / "series.csv"
    path.write_text("run,epoch,f,coop\n0,0,0.5,1.0\n")
    with pytest.raises(SchemaError) as err:
        read_series(path)
    assert err.value.column == "cooperation"
    assert "coop" in str(err.value)


def test_series_extra_column_named(tmp_path):
    path = tmp_path / "series.csv"
    path.write_text("run,epoch,f,cooperation,extra\n")
    with pytest.raises(SchemaError) as err:
        read_series(path)
    assert err.value.column == "extra"


def test_series_bad_value_names_column_and_row(tmp_path):
    path = tmp_path / "series.csv"
    path.write_text("run,epoch,f,cooperation\n0,zero,0.5,1.0\n")
    with pytest.raises(SchemaError) as err:
        read_series(path)
    assert err.value.column == "epoch"
    assert "row 2" in str(err.value)


def test_series_cooperation_outside_unit_interval_rejected(tmp_path):
    path = tmp_path / "series.csv"
    path.write_text("run,epoch,f,cooperation\n0,0,0.5,1.5\n")
    with pytest.raises(SchemaError) as err:
        read_series(path)
    assert err.value.column == "cooperation"


def test_series_missing_file(tmp_path):
    with pytest.raises(SchemaError):
        read_series(tmp_path / "absent.csv")


def test_summary_round_trip(tmp_path):
    rows = [("cond-a", 0.5, 0.12, 0.03), ("cond-a", 3.5, 0.98, 0.01)]
    path = write_summary(tmp_path / "summary.csv", rows)
    got = read_summary(path)
    assert [r[0] for r in got] == ["cond-a", "cond-a"]
    assert got[1][2] == pytest.approx(0.98)


def test_summary_wrong_header_names_column(tmp_path):
    path = tmp_path / "summary.csv"
    path.write_text("condition,f,avg,std\n")
    with pytest.raises(SchemaError) as err:
        read_summary(path)
    assert err.value.column == "mean"
