from __future__ import annotations

import csv
from pathlib import Path

from bilin_tf.errors import ParameterError
from bilin_tf.intervals.collection import IntervalCollection
from bilin_tf.intervals.interval import FreqInterval
from bilin_tf.timefreq.collection import TileCollection
from bilin_tf.timefreq.tiles import SpaceInterval, TriTile

TILE_COLUMNS = (
    "I_center",
    "I_length",
    "omega1_center",
    "omega1_length",
    "omega2_center",
    "omega2_length",
    "omega3_center",
    "omega3_length",
    "strip_index",
)


def write_tile_csv(tc: TileCollection, path: Path) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(TILE_COLUMNS)
        for s in tc:
            row = [s.space.center, s.space.length]
            for omega in s.freqs:
                row += [omega.center, omega.length]
            writer.writerow([repr(value) for value in row] + [s.strip_index])


def read_tile_csv(path: Path, strips: IntervalCollection) -> TileCollection:
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if tuple(reader.fieldnames or ()) != TILE_COLUMNS:
            raise ParameterError(f"{path}: expected columns {TILE_COLUMNS}, got {reader.fieldnames}")
        tritiles = []
        for row in reader:
            freqs = tuple(
                FreqInterval(float(row[f"omega{i}_center"]), float(row[f"omega{i}_length"]))
                for i in (1, 2, 3)
            )
            tritiles.append(
                TriTile(
                    SpaceInterval(float(row["I_center"]), float(row["I_length"])),
                    freqs,  # type: ignore[arg-type]
                    int(row["strip_index"]),
                )
            )
    return TileCollection(tuple(tritiles), strips)
