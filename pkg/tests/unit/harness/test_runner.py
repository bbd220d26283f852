import numpy as np
import pytest

from bilin_tf.config.config import Config
from bilin_tf.config.experiment import validate_experiment
from bilin_tf.config.settings import BilinTfSettings
from bilin_tf.errors import DegenerateInputError
from bilin_tf.harness.csv_writer import ReportRow
from bilin_tf.harness.experiments import experiment, sweep_drift
from bilin_tf.harness.runner import run_trial, summary_row


@pytest.fixture
def config() -> Config:
    return Config(
        BilinTfSettings(_env_file=None),  # type: ignore
        validate_experiment({"experiment": "bilinear_sweep", "trials": 3, "seed": 5}),
    )


@experiment(description="ratio check", columns=("count", "ratio", "ok"), checks=("ok",), summary=sweep_drift)
def checked(ctx):
    value = float(ctx.rng.uniform())
    return [{"count": 4, "ratio": value, "ok": value < 2}]


@experiment(description="always fails", columns=("ratio",))
def failing(ctx):
    raise DegenerateInputError("f = 0")


@experiment(description="failing check", columns=("ratio", "ok"), checks=("ok",))
def rejecting(ctx):
    return [{"ratio": 1.0, "ok": False}]


class TestRunTrial:
    def test_rows_carry_records(self, config):
        stream = np.random.SeedSequence(0)
        rows = run_trial(checked, config, 2, stream)
        assert len(rows) == 1
        assert rows[0].trial == 2
        assert not rows[0].flagged

    def test_same_stream_same_row(self, config):
        first = run_trial(checked, config, 0, np.random.SeedSequence(9))
        second = run_trial(checked, config, 0, np.random.SeedSequence(9))
        assert first == second

    def test_error_becomes_flagged_row(self, config):
        (row,) = run_trial(failing, config, 1, np.random.SeedSequence(0))
        assert row.flagged
        assert row.note == "DegenerateInputError: f = 0"
        assert row.values == {}

    def test_failed_check_flags_row(self, config):
        (row,) = run_trial(rejecting, config, 0, np.random.SeedSequence(0))
        assert row.flagged
        assert row.note == "failed: ok"


class TestSummaryRow:
    def test_constant_and_median(self, config):
        rows = [
            ReportRow("trial", 0, {"count": 4, "ratio": 1.0, "ok": True}),
            ReportRow("trial", 1, {"count": 64, "ratio": 1.5, "ok": True}),
            ReportRow("trial", 2, {"count": 64, "ratio": 9.0, "ok": False}, flagged=True),
            ReportRow("trial", 3, {"count": 64, "ratio": float("inf"), "ok": True}),
        ]
        row = summary_row(checked, config, rows)
        assert row.kind == "summary"
        assert row.trial == 4
        assert row.values == {"ratio": 1.5}
        assert "median=1.25" in row.note
        assert "flagged=1" in row.note
        assert "seed=5" in row.note
        assert "drift_check=fail" in row.note
        assert row.flagged

    def test_no_usable_ratio(self, config):
        rows = [ReportRow("trial", 0, {}, flagged=True, note="boom")]
        row = summary_row(failing, config, rows)
        assert row.values == {"ratio": None}
        assert "constant=n/a" in row.note
        assert not row.flagged
