"""Measurable subsets of the sampled period, for restricted-type estimates."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bilin_tf.errors import ParameterError
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.grid.spec import GridSpec

ADMISSION_SLACK = 1e-12


@dataclass(frozen=True, eq=False)
class MeasurableSet:
    grid: GridSpec
    mask: np.ndarray

    def __post_init__(self) -> None:
        mask = np.array(self.mask, dtype=bool)
        if mask.shape != (self.grid.sample_count,):
            raise ParameterError(
                f"mask must have shape ({self.grid.sample_count},), got {mask.shape}"
            )
        mask.setflags(write=False)
        object.__setattr__(self, "mask", mask)

    @classmethod
    def full(cls, grid: GridSpec) -> MeasurableSet:
        return cls(grid, np.ones(grid.sample_count, dtype=bool))

    @classmethod
    def empty(cls, grid: GridSpec) -> MeasurableSet:
        return cls(grid, np.zeros(grid.sample_count, dtype=bool))

    @classmethod
    def interval(cls, grid: GridSpec, start: float, length: float) -> MeasurableSet:
        """Grid points in [start, start + length), taken periodically."""
        if length < 0:
            raise ParameterError(f"interval length must be nonnegative, got {length}")
        offset = np.mod(np.asarray(grid.points) - start, grid.period_length)
        return cls(grid, offset < length)

    @classmethod
    def random(cls, grid: GridSpec, fraction: float, rng_seed: int) -> MeasurableSet:
        """Uniformly random subset with round(fraction * N) points."""
        if not 0 <= fraction <= 1:
            raise ParameterError(f"fraction must lie in [0, 1], got {fraction}")
        rng = np.random.default_rng(rng_seed)
        count = round(fraction * grid.sample_count)
        mask = np.zeros(grid.sample_count, dtype=bool)
        mask[rng.choice(grid.sample_count, size=count, replace=False)] = True
        return cls(grid, mask)

    @classmethod
    def single_cell(cls, grid: GridSpec, index: int) -> MeasurableSet:
        mask = np.zeros(grid.sample_count, dtype=bool)
        mask[index] = True
        return cls(grid, mask)

    @property
    def count(self) -> int:
        return int(self.mask.sum())

    @property
    def measure(self) -> float:
        return self.grid.spatial_step * self.count

    def is_empty(self) -> bool:
        return self.count == 0

    def union(self, other: MeasurableSet) -> MeasurableSet:
        self.grid.require_same(other.grid)
        return MeasurableSet(self.grid, self.mask | other.mask)

    def admits(self, f: SampledFunction) -> bool:
        """F(E) membership: |f(x_j)| <= 1_E(x_j) at every grid point."""
        self.grid.require_same(f.grid)
        return bool(np.all(np.abs(f.samples) <= self.mask + ADMISSION_SLACK))
