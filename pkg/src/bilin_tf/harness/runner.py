"""Run one experiment end to end: trials, summary row, CSV and plot."""

import logging
import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from bilin_tf.config.config import Config
from bilin_tf.errors import BilinTfError
from bilin_tf.harness.context import TrialContext
from bilin_tf.harness.csv_writer import ReportRow, write_report
from bilin_tf.harness.experiments import EXPERIMENT_REGISTRY, ExperimentDefinition
from bilin_tf.harness.plot import plot_report

logger = logging.getLogger(__name__)

# numerical failures inside a trial become flagged rows
TRIAL_ERRORS: tuple[type[Exception], ...] = (BilinTfError, ArithmeticError, np.linalg.LinAlgError)


@dataclass(frozen=True)
class RunResult:
    csv_path: Path
    plot_path: Path | None
    rows: tuple[ReportRow, ...]

    @property
    def flagged(self) -> int:
        return sum(1 for row in self.rows if row.flagged)


def _failed_checks(definition: ExperimentDefinition, record: dict[str, Any]) -> list[str]:
    return [
        name for name in definition.checks if record.get(name) is not None and not bool(record[name])
    ]


def run_trial(
    definition: ExperimentDefinition, config: Config, index: int, stream: np.random.SeedSequence
) -> list[ReportRow]:
    ctx = TrialContext(config.experiment, index, np.random.default_rng(stream))
    try:
        records = definition(ctx)
    except TRIAL_ERRORS as e:
        logger.warning(f"trial {index} failed: {type(e).__name__}: {e}")
        return [ReportRow("trial", index, {}, flagged=True, note=f"{type(e).__name__}: {e}")]
    rows = []
    for record in records:
        failed = _failed_checks(definition, record)
        note = f"failed: {', '.join(failed)}" if failed else ""
        rows.append(ReportRow("trial", index, record, flagged=bool(failed), note=note))
    return rows


def _describe_run(config: Config) -> list[str]:
    exp = config.experiment
    collection = exp.collection
    tiles = exp.tiles
    return [
        f"L={exp.grid.period_length:g}",
        f"N={exp.grid.sample_count}",
        f"collection={collection.kind}(count={collection.count}, seed={collection.seed})",
        f"tiles=({tiles.strip_count} strips, extent={tiles.space_extent:g}, max={tiles.max_tritiles})",
        f"seed={exp.seed}",
    ]


def summary_row(
    definition: ExperimentDefinition, config: Config, trial_rows: list[ReportRow]
) -> ReportRow:
    """Max and median of the finite ratios among unflagged trial rows."""
    ratio_column = definition.ratio_column
    ratios = [
        float(row.values[ratio_column])
        for row in trial_rows
        if not row.flagged
        and row.values.get(ratio_column) is not None
        and math.isfinite(float(row.values[ratio_column]))
    ]
    flagged = sum(1 for row in trial_rows if row.flagged)
    constant = max(ratios) if ratios else None
    parts = [
        f"constant={constant:.6g}" if constant is not None else "constant=n/a",
        f"median={statistics.median(ratios):.6g}" if ratios else "median=n/a",
        f"flagged={flagged}",
        *_describe_run(config),
    ]

    summary_failed = False
    if definition.summary is not None:
        records = [row.values for row in trial_rows if row.values]
        for key, value in definition.summary(records).items():
            if isinstance(value, bool):
                parts.append(f"{key}={'pass' if value else 'fail'}")
                summary_failed |= not value
            else:
                parts.append(f"{key}={value:.6g}")

    return ReportRow(
        "summary",
        len(trial_rows),
        {ratio_column: constant},
        flagged=summary_failed,
        note="; ".join(parts),
    )


def run_experiment(config: Config, *, plot: bool = False) -> RunResult:
    exp = config.experiment
    definition = EXPERIMENT_REGISTRY[exp.experiment]
    streams = np.random.SeedSequence(exp.seed).spawn(exp.trials)
    logger.info(
        f"running {exp.experiment} with {exp.trials} trials on {config.max_workers} workers"
    )
    with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
        per_trial = list(
            executor.map(
                lambda item: run_trial(definition, config, item[0], item[1]),
                enumerate(streams),
            )
        )
    trial_rows = [row for rows in per_trial for row in rows]
    rows = (*trial_rows, summary_row(definition, config, trial_rows))

    csv_path = write_report(
        exp.output_dir / f"{exp.experiment}.csv",
        str(exp.experiment),
        definition.columns,
        rows,
        checks=definition.checks,
    )
    plot_path = plot_report(csv_path, definition.x_column, definition.ratio_column) if plot else None
    result = RunResult(csv_path, plot_path, rows)
    if result.flagged:
        logger.warning(f"{exp.experiment}: {result.flagged} flagged rows")
    return result
