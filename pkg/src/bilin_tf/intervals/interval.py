from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Self

from bilin_tf.errors import ParameterError

# relative slack for endpoint comparisons
ENDPOINT_TOLERANCE = 1e-12


@dataclass(frozen=True, order=True)
class Interval:
    """Closed interval stored as (center, length)."""

    center: float
    length: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.center) and math.isfinite(self.length)):
            raise ParameterError(f"interval must be finite, got {self}")
        if not self.length > 0:
            raise ParameterError(f"interval length must be positive, got {self.length}")

    @classmethod
    def from_endpoints(cls, lo: float, hi: float) -> Self:
        return cls(0.5 * (lo + hi), hi - lo)

    @property
    def lo(self) -> float:
        return self.center - 0.5 * self.length

    @property
    def hi(self) -> float:
        return self.center + 0.5 * self.length

    def _slack(self, other: Interval | None = None) -> float:
        scale = max(abs(self.lo), abs(self.hi), self.length)
        if other is not None:
            scale = max(scale, abs(other.lo), abs(other.hi))
        return ENDPOINT_TOLERANCE * scale

    def dilate(self, factor: float) -> Self:
        return type(self)(self.center, factor * self.length)

    def shift(self, offset: float) -> Self:
        return type(self)(self.center + offset, self.length)

    def contains(self, x: float) -> bool:
        slack = self._slack()
        return self.lo - slack <= x <= self.hi + slack

    def contains_interval(self, other: Interval) -> bool:
        slack = self._slack(other)
        return self.lo - slack <= other.lo and other.hi <= self.hi + slack

    def overlaps(self, other: Interval) -> bool:
        """Interiors meet in a set of positive length."""
        return min(self.hi, other.hi) - max(self.lo, other.lo) > self._slack(other)

    def meets(self, other: Interval) -> bool:
        """Closed intervals intersect (touching endpoints count)."""
        return min(self.hi, other.hi) - max(self.lo, other.lo) >= -self._slack(other)

    def same_as(self, other: Interval) -> bool:
        slack = self._slack(other)
        return abs(self.lo - other.lo) <= slack and abs(self.hi - other.hi) <= slack


class FreqInterval(Interval):
    """Interval of angular frequencies."""
