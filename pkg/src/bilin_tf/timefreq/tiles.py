"""Tiles and tri-tiles in the time-frequency plane."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from bilin_tf.errors import ParameterError
from bilin_tf.intervals.collection import IntervalCollection
from bilin_tf.intervals.interval import ENDPOINT_TOLERANCE, FreqInterval, Interval

SPACE_LENGTH_RANGE = (0.1, 10.0)
# "area one" resolved to a factor-2 band
AREA_RANGE = (0.5, 2.0)
AUDIT_TOLERANCE = 1e-12

type Component = Literal[1, 2, 3]


class SpaceInterval(Interval):
    """Interval in physical space, used half-open as [lo, hi)."""


def _in_band(value: float, band: tuple[float, float]) -> bool:
    slack = ENDPOINT_TOLERANCE * band[1]
    return band[0] - slack <= value <= band[1] + slack


@dataclass(frozen=True, order=True)
class Tile:
    space: SpaceInterval
    freq: FreqInterval

    def __post_init__(self) -> None:
        if not _in_band(self.space.length, SPACE_LENGTH_RANGE):
            raise ParameterError(f"space length {self.space.length} outside {SPACE_LENGTH_RANGE}")
        if not _in_band(self.area, AREA_RANGE):
            raise ParameterError(f"tile area {self.area} outside {AREA_RANGE}")

    @property
    def area(self) -> float:
        return self.space.length * self.freq.length

    def overlaps(self, other: Tile) -> bool:
        """Rectangles share interior points."""
        return self.space.overlaps(other.space) and self.freq.overlaps(other.freq)


@dataclass(frozen=True, order=True)
class TriTile:
    space: SpaceInterval
    freqs: tuple[FreqInterval, FreqInterval, FreqInterval]
    strip_index: int

    def __post_init__(self) -> None:
        if self.strip_index < 0:
            raise ParameterError(f"strip index must be nonnegative, got {self.strip_index}")
        for component in (1, 2, 3):
            self.tile(component)

    def tile(self, component: Component) -> Tile:
        return Tile(self.space, self.freqs[component - 1])


@dataclass(frozen=True)
class TriTileAudit:
    shared_space: bool
    zero_in_sum: bool
    strip_membership: bool

    @property
    def passed(self) -> bool:
        return self.shared_space and self.zero_in_sum and self.strip_membership


def audit_tritile(s: TriTile, strips: IntervalCollection) -> TriTileAudit:
    """Check the three tri-tile conditions against the strip collection."""
    shared = all(s.tile(i).space == s.space for i in (1, 2, 3))

    lo_sum = sum(w.lo for w in s.freqs)
    hi_sum = sum(w.hi for w in s.freqs)
    scale = max(abs(w.lo) + abs(w.hi) for w in s.freqs)
    zero_in_sum = lo_sum - AUDIT_TOLERANCE * scale <= 0.0 <= hi_sum + AUDIT_TOLERANCE * scale

    membership = False
    if 0 <= s.strip_index < len(strips):
        strip = strips[s.strip_index]
        first, second = s.freqs[0], s.freqs[1]
        differences = FreqInterval.from_endpoints(second.lo - first.hi, second.hi - first.lo)
        membership = strip.contains_interval(differences) and _in_band(
            s.space.length * strip.length, AREA_RANGE
        )
    return TriTileAudit(shared, zero_in_sum, membership)
