"""Smooth scaled cutoffs chi_omega.

The building block is the smooth step

    S(y) = psi(y) / (psi(y) + psi(1 - y)),   psi(y) = exp(-1/y) for y > 0,

the one-sided factor of the mollifier exp(-1/(1 - t^2)). S vanishes for
y <= 0, equals 1 for y >= 1 and satisfies S(y) + S(1 - y) = 1, so ramps built
from it telescope into exact partitions of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy import integrate, special

from bilin_tf.errors import ParameterError
from bilin_tf.intervals.interval import Interval

DEFAULT_FLATNESS = 0.6
AUDIT_MESH_POINTS = 10_000
AUDIT_MAX_ORDER = 4


def smooth_step(y: np.ndarray | float) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    inner = np.clip(y, 1e-300, 1.0)
    with np.errstate(over="ignore", divide="ignore"):
        values = special.expit(1.0 / (1.0 - inner) - 1.0 / inner)
    return np.where(y <= 0.0, 0.0, np.where(y >= 1.0, 1.0, values))


@dataclass(frozen=True)
class BumpSymbol:
    """chi_omega: 1 on the central ``flatness`` fraction of omega, 0 outside."""

    interval: Interval
    flatness: float = DEFAULT_FLATNESS

    def __post_init__(self) -> None:
        if not 0 <= self.flatness < 1:
            raise ParameterError(f"flatness must lie in [0, 1), got {self.flatness}")

    def __call__(self, xi: np.ndarray | float) -> np.ndarray:
        t = np.abs(np.asarray(xi, dtype=float) - self.interval.center) / (
            0.5 * self.interval.length
        )
        u = (t - self.flatness) / (1.0 - self.flatness)
        return np.where(t >= 1.0, 0.0, smooth_step(1.0 - u))

    @cached_property
    def derivative_constants(self) -> tuple[float, ...]:
        """Measured C_i with max|D^i chi| = C_i |omega|^-i, i = 0..4.

        Each order applies the second-order central stencil of ``np.gradient``
        to the previous one; chi vanishes at both mesh ends.
        """
        lo, hi = self.interval.lo, self.interval.hi
        mesh, step = np.linspace(lo, hi, AUDIT_MESH_POINTS, retstep=True)
        values = self(mesh)
        constants = [float(np.abs(values).max())]
        derivative = values
        for order in range(1, AUDIT_MAX_ORDER + 1):
            derivative = np.gradient(derivative, step, edge_order=2)
            constants.append(float(np.abs(derivative).max() * self.interval.length**order))
        return tuple(constants)

    def integral(self) -> float:
        lo, hi = self.interval.lo, self.interval.hi
        plateau = self.flatness * 0.5 * self.interval.length
        breaks = [self.interval.center - plateau, self.interval.center + plateau]
        value, _ = integrate.quad(
            lambda x: float(self(x)), lo, hi, points=breaks, epsabs=1e-14, epsrel=1e-13, limit=200
        )
        return value


def make_bump(omega: Interval, flatness: float = DEFAULT_FLATNESS) -> BumpSymbol:
    return BumpSymbol(omega, flatness)


def unit_partition_bump() -> BumpSymbol:
    """chi on [-1, 1] with sum_p chi(x - p) = 1 exactly."""
    return BumpSymbol(Interval(0.0, 2.0), 0.0)
