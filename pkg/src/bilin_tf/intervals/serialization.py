from __future__ import annotations

import csv
from pathlib import Path

from bilin_tf.errors import ParameterError
from bilin_tf.intervals.collection import IntervalCollection
from bilin_tf.intervals.interval import FreqInterval

COLLECTION_COLUMNS = ("center", "length")


def write_collection_csv(c: IntervalCollection, path: Path) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(COLLECTION_COLUMNS)
        for interval in c:
            writer.writerow((repr(interval.center), repr(interval.length)))


def read_collection_csv(path: Path, kappa: float = 2.0) -> IntervalCollection:
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if tuple(reader.fieldnames or ()) != COLLECTION_COLUMNS:
            raise ParameterError(
                f"{path}: expected columns {COLLECTION_COLUMNS}, got {reader.fieldnames}"
            )
        intervals = [FreqInterval(float(row["center"]), float(row["length"])) for row in reader]
    return IntervalCollection.of(intervals, kappa=kappa)
