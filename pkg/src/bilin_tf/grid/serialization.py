from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from bilin_tf.errors import GridError
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.grid.spec import GridSpec

SAMPLED_COLUMNS = ("x", "re", "im")


def write_sampled_csv(f: SampledFunction, path: Path) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(SAMPLED_COLUMNS)
        for x, value in zip(f.grid.points, f.samples, strict=True):
            writer.writerow((repr(float(x)), repr(float(value.real)), repr(float(value.imag))))


def read_sampled_csv(path: Path, grid: GridSpec) -> SampledFunction:
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if tuple(reader.fieldnames or ()) != SAMPLED_COLUMNS:
            raise GridError(f"{path}: expected columns {SAMPLED_COLUMNS}, got {reader.fieldnames}")
        rows = list(reader)
    samples = np.array([float(row["re"]) + 1j * float(row["im"]) for row in rows])
    return SampledFunction(grid, samples)
