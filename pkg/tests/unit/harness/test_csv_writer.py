import math

import numpy as np
import pytest

from bilin_tf.errors import ParameterError
from bilin_tf.harness.csv_writer import (
    ReportRow,
    format_value,
    header_line,
    read_report,
    report_columns,
    write_report,
)


@pytest.mark.parametrize(
    "value, verdict, expected",
    [
        (None, False, ""),
        (True, False, "true"),
        (False, True, "fail"),
        (True, True, "pass"),
        (3, False, "3"),
        (0.1, False, "0.1"),
        (math.inf, False, "inf"),
        (math.nan, False, "nan"),
        (np.float64(2.5), False, "2.5"),
        (np.bool_(True), True, "pass"),
        ("gauss", False, "gauss"),
    ],
)
def test_format_value(value, verdict, expected):
    assert format_value(value, verdict=verdict) == expected


def test_floats_round_trip():
    value = 1 / 3
    assert float(format_value(value)) == value


def test_reserved_columns():
    with pytest.raises(ParameterError):
        report_columns(("ratio", "note"))


def test_write_and_read(tmp_path):
    rows = [
        ReportRow("trial", 0, {"ratio": 0.5, "identity": True}),
        ReportRow("trial", 1, {"ratio": None, "identity": False}, flagged=True, note="failed: identity"),
        ReportRow("summary", 2, {"ratio": 0.5}, note="constant=0.5; flagged=1"),
    ]
    path = write_report(tmp_path / "out" / "demo.csv", "demo", ("ratio", "identity"), rows, checks=("identity",))
    header, data = read_report(path)
    assert header == header_line("demo")
    assert list(data[0]) == ["row_kind", "trial", "ratio", "identity", "flagged", "note"]
    assert [row["identity"] for row in data] == ["pass", "fail", ""]
    assert [row["flagged"] for row in data] == ["false", "true", "false"]
    assert data[1]["ratio"] == ""
    assert data[2]["note"] == "constant=0.5; flagged=1"


def test_missing_header(tmp_path):
    path = tmp_path / "plain.csv"
    path.write_text("row_kind,trial\n")
    with pytest.raises(ParameterError):
        read_report(path)
