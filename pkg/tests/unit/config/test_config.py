from pathlib import Path

import pytest

from bilin_tf.config.config import load_config
from bilin_tf.config.experiment import load_experiment, validate_experiment
from bilin_tf.config.experiment_file import read_experiment_file
from bilin_tf.config.settings import BilinTfSettings
from bilin_tf.errors import ConfigError
from bilin_tf.harness.experiment_names import Experiment

TOML_CONFIG = """
experiment = "bilinear_sweep"
trials = 3
seed = 11

[grid]
period_length = 32.0
sample_count = 256

[collection]
kind = "dyadic"
sweep_counts = [2, 4]
"""

YAML_CONFIG = """
trials: 5
exponents:
  p: 3.0
  q: 6.0
symbol:
  preset: hilbert_ridge
  params:
    width: 2.0
"""


@pytest.fixture
def toml_file(tmp_path: Path) -> Path:
    path = tmp_path / "sweep.toml"
    path.write_text(TOML_CONFIG)
    return path


class TestSettings:
    def test_env_vars(self, monkeypatch):
        monkeypatch.setenv("BILIN_TF_THREADS", "3")
        monkeypatch.setenv("BILIN_TF_FILE_LOGGING", "true")
        monkeypatch.setenv("BILIN_TF_LOG_LEVEL", "debug")
        settings = BilinTfSettings(_env_file=None)  # type: ignore
        assert settings.threads == 3
        assert settings.file_logging is True
        assert settings.log_level == "debug"

    def test_non_positive_threads_clamped(self, monkeypatch):
        monkeypatch.setenv("BILIN_TF_THREADS", "0")
        assert BilinTfSettings(_env_file=None).threads == 1  # type: ignore

    def test_defaults(self):
        settings = BilinTfSettings(_env_file=None)  # type: ignore
        assert settings.threads >= 1
        assert settings.file_logging is False
        assert settings.log_level is None


class TestExperimentFile:
    def test_toml(self, toml_file):
        config = load_experiment(Experiment.BILINEAR_SWEEP, toml_file)
        assert config.trials == 3
        assert config.seed == 11
        assert config.grid.to_grid().sample_count == 256
        assert config.collection.kind == "dyadic"
        assert config.collection.sweep_counts == [2, 4]

    def test_yaml(self, tmp_path):
        path = tmp_path / "pseudo.yaml"
        path.write_text(YAML_CONFIG)
        config = load_experiment(Experiment.PSEUDO_BUCKET, path)
        assert config.experiment is Experiment.PSEUDO_BUCKET
        assert config.exponents.triple().r == pytest.approx(2.0)
        assert config.symbol.preset == "hilbert_ridge"

    def test_yml_alternate_suffix(self, tmp_path):
        (tmp_path / "pseudo.yml").write_text(YAML_CONFIG)
        assert read_experiment_file(tmp_path / "pseudo.yaml")["trials"] == 5

    @pytest.mark.parametrize("name", ["config.json", "missing.toml"])
    def test_unreadable(self, tmp_path, name):
        with pytest.raises(ConfigError):
            read_experiment_file(tmp_path / name)

    def test_wrong_experiment(self, toml_file):
        with pytest.raises(ConfigError, match="bilinear_sweep"):
            load_experiment(Experiment.WEAK_TYPE_ESTIMATE, toml_file)

    def test_overrides_win(self, toml_file):
        config = load_experiment(
            Experiment.BILINEAR_SWEEP, toml_file, {"trials": 9, "seed": None, "output_path": "out"}
        )
        assert config.trials == 9
        assert config.seed == 11
        assert config.output_dir == Path("out")


class TestValidation:
    @pytest.mark.parametrize(
        "data, field",
        [
            pytest.param({"trials": 0}, "trials", id="zero-trials"),
            pytest.param({"seed": -1}, "seed", id="negative-seed"),
            pytest.param({"grid": {"sample_count": 100}}, "grid", id="not-power-of-two"),
            pytest.param({"grid": {"depth": 2}}, "grid.depth", id="unknown-key"),
            pytest.param({"exponents": {"p": 4.0, "q": 4.0, "r": 3.0}}, "exponents", id="holder"),
            pytest.param({"symbol": {"n_range": [2, 1]}}, "symbol", id="empty-range"),
            pytest.param({"tiles": {"exponents": [2.0, 3.0, 3.0]}}, "tiles", id="tile-exponent"),
            pytest.param({"weak_type": {"fractions": [0.0, 0.5, 0.5]}}, "weak_type", id="fraction"),
        ],
    )
    def test_rejected(self, data, field):
        with pytest.raises(ConfigError, match=field):
            validate_experiment({"experiment": "bilinear_sweep"} | data)

    def test_every_problem_reported(self):
        with pytest.raises(ConfigError) as excinfo:
            validate_experiment({"experiment": "bilinear_sweep", "trials": 0, "extra": 1})
        assert "trials" in str(excinfo.value)
        assert "extra" in str(excinfo.value)


def test_max_workers_capped_by_trials(monkeypatch, toml_file):
    monkeypatch.setenv("BILIN_TF_THREADS", "16")
    config = load_config(Experiment.BILINEAR_SWEEP, toml_file)
    assert config.max_workers == 3
