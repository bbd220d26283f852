"""Finite collections of frequency intervals and their overlap constants."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from bilin_tf.errors import AssumptionError, EmptyCollectionError, ParameterError
from bilin_tf.intervals.interval import ENDPOINT_TOLERANCE, FreqInterval

logger = logging.getLogger(__name__)

# admissible interval lengths for the uniform square-function bounds
ASSUMPTION_LENGTH_RANGE = (0.1, 10.0)
MESH_RESOLUTION = 100


@dataclass(frozen=True)
class IntervalCollection:
    intervals: tuple[FreqInterval, ...]
    length_range: tuple[float, float]
    kappa: float = 2.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(self.intervals))
        low, high = self.length_range
        if not 0 < low <= high:
            raise ParameterError(f"invalid length range {self.length_range}")
        if self.kappa < 2:
            raise ParameterError(f"kappa must be >= 2, got {self.kappa}")
        slack = ENDPOINT_TOLERANCE * high
        for interval in self.intervals:
            if not low - slack <= interval.length <= high + slack:
                raise ParameterError(
                    f"{interval} has length outside the declared range {self.length_range}"
                )

    @classmethod
    def of(
        cls,
        intervals: Iterable[FreqInterval],
        length_range: tuple[float, float] | None = None,
        kappa: float = 2.0,
    ) -> IntervalCollection:
        """Collection whose declared range defaults to the observed lengths."""
        items = tuple(intervals)
        if length_range is None:
            if not items:
                raise EmptyCollectionError("cannot infer a length range from no intervals")
            lengths = [interval.length for interval in items]
            length_range = (min(lengths), max(lengths))
        return cls(items, length_range, kappa)

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self) -> Iterator[FreqInterval]:
        return iter(self.intervals)

    def __getitem__(self, index: int) -> FreqInterval:
        return self.intervals[index]

    @property
    def satisfies_assumption(self) -> bool:
        low, high = ASSUMPTION_LENGTH_RANGE
        slack = ENDPOINT_TOLERANCE * high
        return low - slack <= self.length_range[0] and self.length_range[1] <= high + slack

    def require_assumption(self) -> None:
        if not self.satisfies_assumption:
            raise AssumptionError(
                f"lengths {self.length_range} are outside {ASSUMPTION_LENGTH_RANGE}"
            )

    def with_interval(self, interval: FreqInterval) -> IntervalCollection:
        return IntervalCollection.of((*self.intervals, interval), kappa=self.kappa)

    def pairwise_disjoint(self) -> bool:
        """No two intervals share interior points."""
        ordered = sorted(self.intervals, key=lambda w: w.lo)
        return all(not a.overlaps(b) for a, b in zip(ordered, ordered[1:]))

    def endpoints(self, factor: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
        centers = np.array([w.center for w in self.intervals])
        half = 0.5 * factor * np.array([w.length for w in self.intervals])
        return centers - half, centers + half


def max_overlap(los: Sequence[float], his: Sequence[float], *, closed: bool = True) -> int:
    """Largest number of intervals sharing a point, by endpoint sweep.

    With ``closed`` intervals that touch at an endpoint overlap there; with
    half-open intervals [lo, hi) they do not.
    """
    # at equal coordinates, closed: starts first; half-open: ends first
    start_rank, end_rank = (0, 1) if closed else (1, 0)
    events = sorted(
        [(float(lo), start_rank, 1) for lo in los] + [(float(hi), end_rank, -1) for hi in his]
    )
    best = current = 0
    for _, _, step in events:
        current += step
        best = max(best, current)
    return best


def overlap_constant(c: IntervalCollection, factor: float = 2.0) -> int:
    """Max over the line of the number of dilates factor*omega containing a point."""
    if not len(c):
        raise EmptyCollectionError("overlap constant of an empty collection")
    if factor < 1:
        raise ParameterError(f"dilation factor must be >= 1, got {factor}")
    los, his = c.endpoints(factor)
    return max_overlap(los, his)


def overlap_constant_mesh(c: IntervalCollection, factor: float = 2.0) -> int:
    """Mesh estimate of the overlap constant with step l_min / 100.

    Never exceeds the exact sweep value; used only as a consistency check.
    """
    if not len(c):
        raise EmptyCollectionError("overlap constant of an empty collection")
    los, his = c.endpoints(factor)
    step = c.length_range[0] / MESH_RESOLUTION
    count = math.ceil((his.max() - los.min()) / step) + 1
    mesh = los.min() + step * np.arange(count)
    starts = np.sort(los)
    ends = np.sort(his)
    covering = np.searchsorted(starts, mesh, side="right") - np.searchsorted(
        ends, mesh, side="left"
    )
    return int(covering.max())
