from pathlib import Path

import pytest

from bilin_tf.harness import experiments
from bilin_tf.harness.csv_writer import read_report
from bilin_tf.main import EXIT_CONFIG, EXIT_FLAGGED, EXIT_OK, run
from tests.env_vars import default_env_vars_context

SMALL_GRID = """
[grid]
period_length = 32.0
sample_count = 256
"""

PLANCHEREL_CONFIG = (
    """
experiment = "plancherel_check"
trials = 4
seed = 3

[collection]
count = 6
"""
    + SMALL_GRID
)

SWEEP_CONFIG = (
    """
experiment = "bilinear_sweep"
trials = 2
seed = 1

[collection]
sweep_counts = [2, 4]

[functions.params]
band_low = -8.0
band_high = 8.0
"""
    + SMALL_GRID
)


def _write(tmp_path: Path, name: str, text: str) -> Path:
    path = tmp_path / name
    path.write_text(text)
    return path


def _run(tmp_path: Path, command: str, config: Path, out: str, *extra: str, threads: str = "1") -> int:
    with default_env_vars_context({"BILIN_TF_THREADS": threads}):
        return run([command, "--config", str(config), "--out", str(tmp_path / out), *extra])


def test_plancherel_report(tmp_path, capsys):
    config = _write(tmp_path, "plancherel.toml", PLANCHEREL_CONFIG)
    assert _run(tmp_path, "plancherel-check", config, "out") == EXIT_OK
    csv_path = tmp_path / "out" / "plancherel_check.csv"
    assert capsys.readouterr().out.strip() == str(csv_path)

    header, rows = read_report(csv_path)
    assert header.endswith(" plancherel_check")
    trials = [row for row in rows if row["row_kind"] == "trial"]
    assert [row["trial"] for row in trials] == ["0", "1", "2", "3"]
    assert {row["identity"] for row in trials} == {"pass"}
    assert {row["pieces"] for row in trials} == {"6"}
    (summary,) = [row for row in rows if row["row_kind"] == "summary"]
    assert summary["trial"] == "4"
    assert "flagged=0" in summary["note"]


def test_report_independent_of_thread_count(tmp_path):
    config = _write(tmp_path, "sweep.toml", SWEEP_CONFIG)
    assert _run(tmp_path, "bilinear-sweep", config, "one", threads="1") == EXIT_OK
    assert _run(tmp_path, "bilinear-sweep", config, "many", threads="4") == EXIT_OK
    one = (tmp_path / "one" / "bilinear_sweep.csv").read_bytes()
    many = (tmp_path / "many" / "bilinear_sweep.csv").read_bytes()
    assert one == many


def test_seed_override_changes_report(tmp_path):
    config = _write(tmp_path, "plancherel.toml", PLANCHEREL_CONFIG)
    _run(tmp_path, "plancherel-check", config, "a")
    _run(tmp_path, "plancherel-check", config, "b", "--seed", "4")
    a = (tmp_path / "a" / "plancherel_check.csv").read_text()
    b = (tmp_path / "b" / "plancherel_check.csv").read_text()
    assert a != b


def test_plot_written(tmp_path):
    config = _write(tmp_path, "sweep.toml", SWEEP_CONFIG)
    assert _run(tmp_path, "bilinear-sweep", config, "out", "--plot") == EXIT_OK
    svg = tmp_path / "out" / "bilinear_sweep.svg"
    assert svg.read_text().lstrip().startswith("<?xml")


@pytest.mark.parametrize(
    "text",
    [
        pytest.param(PLANCHEREL_CONFIG.replace("trials = 4", "trials = 0"), id="zero-trials"),
        pytest.param(PLANCHEREL_CONFIG + "\nunknown = 1\n", id="unknown-key"),
    ],
)
def test_config_error_exit(tmp_path, text):
    config = _write(tmp_path, "bad.toml", text)
    assert _run(tmp_path, "plancherel-check", config, "out") == EXIT_CONFIG
    assert not (tmp_path / "out").exists()


def test_wrong_sub_command_exit(tmp_path):
    config = _write(tmp_path, "plancherel.toml", PLANCHEREL_CONFIG)
    assert _run(tmp_path, "bilinear-sweep", config, "out") == EXIT_CONFIG


def test_missing_config_exit(tmp_path):
    assert _run(tmp_path, "plancherel-check", tmp_path / "absent.toml", "out") == EXIT_CONFIG


def test_flagged_rows_exit(tmp_path, monkeypatch):
    monkeypatch.setattr(experiments, "PLANCHEREL_TOLERANCE", -1.0)
    config = _write(tmp_path, "plancherel.toml", PLANCHEREL_CONFIG)
    assert _run(tmp_path, "plancherel-check", config, "out") == EXIT_FLAGGED
    _, rows = read_report(tmp_path / "out" / "plancherel_check.csv")
    trials = [row for row in rows if row["row_kind"] == "trial"]
    assert all(row["flagged"] == "true" and row["note"] == "failed: identity" for row in trials)
