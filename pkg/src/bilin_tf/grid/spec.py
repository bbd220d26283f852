"""Uniform periodic grids.

Key concepts
------------
A grid samples one period [-L/2, L/2) of a periodic function at the N
points x_j = -L/2 + j*h, h = L/N. Frequencies are the angular wavenumbers
xi_k = 2*pi*k/L, stored in FFT order (k = 0, 1, ..., N/2-1, -N/2, ..., -1),
so the representable band is [-pi*N/L, pi*N/L).

Because the grid is centered, e^{i xi_k x_j} = (-1)^k e^{2 pi i k j / N}
exactly, which lets single modes be built from a twiddle table without any
floating-point phase drift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from bilin_tf.errors import BandError, GridError, ParameterError

DEFAULT_PERIOD_LENGTH = 64.0
DEFAULT_SAMPLE_COUNT = 4096
MIN_SAMPLE_COUNT = 64


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class GridSpec:
    period_length: float = DEFAULT_PERIOD_LENGTH
    sample_count: int = DEFAULT_SAMPLE_COUNT

    def __post_init__(self) -> None:
        if not (math.isfinite(self.period_length) and self.period_length > 0):
            raise GridError(f"period_length must be positive, got {self.period_length}")
        n = self.sample_count
        if n < MIN_SAMPLE_COUNT or n & (n - 1):
            raise GridError(
                f"sample_count must be a power of two >= {MIN_SAMPLE_COUNT}, got {n}"
            )

    @property
    def spatial_step(self) -> float:
        return self.period_length / self.sample_count

    @property
    def frequency_step(self) -> float:
        return 2.0 * math.pi / self.period_length

    @property
    def nyquist(self) -> float:
        """Half-width of the representable band, pi*N/L."""
        return math.pi * self.sample_count / self.period_length

    @property
    def nyquist_band(self) -> tuple[float, float]:
        return (-self.nyquist, self.nyquist)

    @cached_property
    def points(self) -> np.ndarray:
        j = np.arange(self.sample_count)
        return _readonly(-0.5 * self.period_length + j * self.spatial_step)

    @cached_property
    def frequency_indices(self) -> np.ndarray:
        """Integer k for each FFT position."""
        n = self.sample_count
        return _readonly(np.fft.fftfreq(n, d=1.0 / n).round().astype(np.int64))

    @cached_property
    def frequencies(self) -> np.ndarray:
        """Angular wavenumbers xi_k in FFT order."""
        return _readonly(self.frequency_indices * self.frequency_step)

    @cached_property
    def sign_alternation(self) -> np.ndarray:
        """(-1)^k in FFT order; positions and indices share parity since N is even."""
        signs = np.ones(self.sample_count)
        signs[1::2] = -1.0
        return _readonly(signs)

    @cached_property
    def twiddle(self) -> np.ndarray:
        m = np.arange(self.sample_count)
        return _readonly(np.exp(2j * np.pi * m / self.sample_count))

    def position_of(self, k: int) -> int:
        """FFT position holding integer frequency index k."""
        return int(k) % self.sample_count

    def frequency_index(self, xi: float, *, tolerance: float = 1e-9) -> int:
        """Integer index of a grid frequency; raise if xi is off the grid."""
        k = round(xi / self.frequency_step)
        if abs(xi - k * self.frequency_step) > tolerance * self.frequency_step:
            raise ParameterError(f"{xi} is not a grid frequency (step {self.frequency_step})")
        if not -self.sample_count // 2 <= k < self.sample_count // 2:
            raise BandError(f"frequency {xi} outside the Nyquist band {self.nyquist_band}")
        return k

    def mode(self, k: int) -> np.ndarray:
        """Samples of e^{i xi_k x} computed exactly from the twiddle table."""
        j = np.arange(self.sample_count, dtype=np.int64)
        sign = -1.0 if k % 2 else 1.0
        return sign * self.twiddle[(int(k) * j) % self.sample_count]

    def band_mask(self, low: float, high: float) -> np.ndarray:
        """Boolean mask (FFT order) of frequencies in the closed band [low, high]."""
        if low > high:
            raise ParameterError(f"empty band [{low}, {high}]")
        if low < -self.nyquist or high >= self.nyquist:
            raise BandError(
                f"band [{low}, {high}] exceeds the Nyquist band {self.nyquist_band}"
            )
        xi = self.frequencies
        slack = 1e-9 * self.frequency_step
        return (xi >= low - slack) & (xi <= high + slack)

    def require_same(self, *others: GridSpec) -> None:
        for other in others:
            if other != self:
                raise GridError(f"grid mismatch: {self} vs {other}")
