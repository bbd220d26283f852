from dataclasses import dataclass
from pathlib import Path
from typing import Any

from bilin_tf.config.experiment import ExperimentConfig, load_experiment
from bilin_tf.config.settings import BilinTfSettings
from bilin_tf.harness.experiment_names import Experiment
from bilin_tf.telemetry.logging import configure_logging

PACKAGE_NAME = "bilin-tf"


@dataclass
class Config:
    settings: BilinTfSettings
    experiment: ExperimentConfig

    @property
    def max_workers(self) -> int:
        return max(1, min(self.settings.threads, self.experiment.trials))


def load_config(
    experiment: Experiment,
    config_path: Path | None = None,
    overrides: dict[str, Any] | None = None,
) -> Config:
    settings = BilinTfSettings()  # type: ignore
    configure_logging(file_logging=settings.file_logging, log_level=settings.log_level)
    return Config(
        settings=settings,
        experiment=load_experiment(experiment, config_path, overrides),
    )
