import argparse
import logging
import sys
from pathlib import Path

from bilin_tf.config.config import PACKAGE_NAME, load_config
from bilin_tf.errors import ConfigError
from bilin_tf.harness.experiment_names import Experiment
from bilin_tf.harness.experiments import EXPERIMENT_REGISTRY
from bilin_tf.harness.runner import run_experiment

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_FLAGGED = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PACKAGE_NAME,
        description="Run numerical experiments on bilinear time-frequency estimates",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="EXPERIMENT")
    for name in Experiment:
        sub = commands.add_parser(name.command, help=EXPERIMENT_REGISTRY[name].description)
        sub.set_defaults(experiment=name)
        sub.add_argument("--config", type=Path, help="TOML or YAML experiment file")
        sub.add_argument("--seed", type=int, help="override the master seed")
        sub.add_argument("--trials", type=int, help="override the trial count")
        sub.add_argument("--out", help="output directory for the CSV and plot")
        sub.add_argument("--plot", action="store_true", help="also write an SVG plot")
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    overrides = {"seed": args.seed, "trials": args.trials, "output_path": args.out}
    try:
        config = load_config(args.experiment, args.config, overrides)
    except ConfigError as e:
        logger.error(str(e))
        return EXIT_CONFIG
    result = run_experiment(config, plot=args.plot)
    print(result.csv_path)
    return EXIT_FLAGGED if result.flagged else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
