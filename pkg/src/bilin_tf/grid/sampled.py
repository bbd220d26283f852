"""Sampled periodic functions and the discrete Fourier transform.

The transform discretizes f^(xi) = int f(x) e^{-i x xi} dx on the grid:

    c_k = h * sum_j f(x_j) e^{-i xi_k x_j},
    f(x_j) = (1/L) * sum_k c_k e^{i xi_k x_j},

so that h * sum_j |f(x_j)|^2 = (1/L) * sum_k |c_k|^2 (Parseval).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import fft as sp_fft

from bilin_tf.errors import GridError
from bilin_tf.grid.spec import GridSpec


def _frozen_copy(values: np.ndarray | list, grid: GridSpec, what: str) -> np.ndarray:
    array = np.array(values, dtype=np.complex128)
    if array.shape != (grid.sample_count,):
        raise GridError(
            f"{what} must have shape ({grid.sample_count},), got {array.shape}"
        )
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Complex samples of a periodic function, with a lazily cached spectrum.

    Instances are immutable. The spectrum cache is filled at most once with a
    value that depends only on the samples, so concurrent readers can race on
    it harmlessly.
    """

    grid: GridSpec
    samples: np.ndarray
    cached_spectrum: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "samples", _frozen_copy(self.samples, self.grid, "samples"))
        if self.cached_spectrum is not None:
            object.__setattr__(
                self,
                "cached_spectrum",
                _frozen_copy(self.cached_spectrum, self.grid, "cached_spectrum"),
            )

    @classmethod
    def from_spectrum(cls, grid: GridSpec, coefficients: np.ndarray) -> SampledFunction:
        return inverse_transform(grid, coefficients)

    @classmethod
    def zeros(cls, grid: GridSpec) -> SampledFunction:
        return cls(grid, np.zeros(grid.sample_count), np.zeros(grid.sample_count))

    @classmethod
    def from_callable(cls, grid: GridSpec, fn) -> SampledFunction:
        return cls(grid, fn(np.asarray(grid.points)))

    def spectrum(self) -> np.ndarray:
        return forward_transform(self)

    def scaled(self, alpha: complex) -> SampledFunction:
        spectrum = None if self.cached_spectrum is None else alpha * self.cached_spectrum
        return SampledFunction(self.grid, alpha * self.samples, spectrum)

    def plus(self, other: SampledFunction) -> SampledFunction:
        self.grid.require_same(other.grid)
        return SampledFunction(self.grid, self.samples + other.samples)

    def is_zero(self) -> bool:
        return not np.any(self.samples)


def forward_transform(f: SampledFunction) -> np.ndarray:
    """Frequency coefficients c_k of f in FFT order (read-only, cached on f)."""
    if f.cached_spectrum is not None:
        return f.cached_spectrum
    grid = f.grid
    coefficients = grid.spatial_step * grid.sign_alternation * sp_fft.fft(f.samples)
    coefficients.setflags(write=False)
    object.__setattr__(f, "cached_spectrum", coefficients)
    return coefficients


def inverse_transform(grid: GridSpec, coefficients: np.ndarray) -> SampledFunction:
    spectrum = _frozen_copy(coefficients, grid, "coefficients")
    samples = (grid.sample_count / grid.period_length) * sp_fft.ifft(
        spectrum * grid.sign_alternation
    )
    return SampledFunction(grid, samples, spectrum)
