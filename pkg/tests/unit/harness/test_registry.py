import pytest

from bilin_tf.harness.experiment_names import Experiment
from bilin_tf.harness.experiments import (
    EXPERIMENT_REGISTRY,
    EXPERIMENTS,
    ExperimentDefinition,
    energy_summary,
    experiment,
    sweep_drift,
    tree_summary,
)
from bilin_tf.main import build_parser


def test_every_experiment_is_registered():
    assert set(EXPERIMENT_REGISTRY) == set(Experiment)
    assert len(EXPERIMENTS) == len(Experiment.get_all_experiment_names())


@pytest.mark.parametrize("name", list(Experiment))
def test_definition_columns(name):
    definition = EXPERIMENT_REGISTRY[name]
    assert len(set(definition.columns)) == len(definition.columns)
    assert set(definition.checks) <= set(definition.columns)
    assert definition.ratio_column in definition.columns
    assert definition.x_column == "trial" or definition.x_column in definition.columns
    assert definition.description


def test_cli_commands_match_registry():
    parser = build_parser()
    for name in Experiment:
        args = parser.parse_args([name.command])
        assert args.experiment is name


def test_record_columns_enforced():
    @experiment(description="broken", columns=("ratio",))
    def broken(ctx):
        return [{"ratio": 1.0, "stray": 2}]

    assert isinstance(broken, ExperimentDefinition)
    with pytest.raises(AssertionError, match="stray"):
        broken(None)


class TestSummaries:
    def test_sweep_drift(self):
        records = [
            {"count": 4, "ratio": 1.0},
            {"count": 4, "ratio": 1.5},
            {"count": 64, "ratio": 3.0},
        ]
        assert sweep_drift(records) == {"drift": 2.0, "drift_check": True}

    def test_sweep_drift_fails_on_growth(self):
        records = [{"count": 4, "ratio": 1.0}, {"count": 64, "ratio": 5.0}]
        assert sweep_drift(records)["drift_check"] is False

    def test_single_count_has_no_drift(self):
        assert sweep_drift([{"count": 4, "ratio": 1.0}]) == {}

    def test_energy_summary(self):
        records = [
            {"oracle_equal": True, "c_alg": 1.0},
            {"oracle_equal": False, "c_alg": 3.0},
        ]
        summary = energy_summary(records)
        assert summary["oracle_equal_fraction"] == 0.5
        assert summary["c_alg_max"] == 3.0
        assert summary["c_alg_check"] is True

    def test_tree_summary_spread(self):
        records = [{"c_tree": 0.5}, {"c_tree": 1.0}, {"c_tree": 0.25}, {"c_tree": 0.0}]
        summary = tree_summary(records)
        assert summary["c_tree_max"] == 1.0
        assert summary["c_tree_min"] == 0.25
        assert summary["spread"] == 4.0
        assert summary["spread_check"] is True

    def test_tree_summary_flags_wide_spread(self):
        records = [{"c_tree": 0.05}, {"c_tree": 1.0}]
        assert tree_summary(records)["spread_check"] is False

    def test_tree_summary_without_constants(self):
        assert tree_summary([{"c_tree": 0.0}, {}]) == {}
