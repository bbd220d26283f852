"""Off-diagonal decay of T_sigma(f, g) away from a localized input."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from bilin_tf.errors import DegenerateInputError, ParameterError
from bilin_tf.grid.norms import lp_norm_values
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.multiplier.bilinear import apply_bilinear
from bilin_tf.multiplier.symbols import SymbolDescriptor

logger = logging.getLogger(__name__)

WINDOW_LENGTH = 1.0


@dataclass(frozen=True)
class OffDiagonalReport:
    center: float
    distances: tuple[int, ...]
    local_norms: tuple[float, ...]
    decay_exponent: float


def _local_norm(values: np.ndarray, f: SampledFunction, center: float, r: float) -> float:
    period = f.grid.period_length
    offset = (np.asarray(f.grid.points) - center + 0.5 * period) % period - 0.5 * period
    inside = np.abs(offset) < 0.5 * WINDOW_LENGTH
    return lp_norm_values(values[inside], f.grid, r)


def offdiag_decay(
    f: SampledFunction,
    g: SampledFunction,
    sigma: SymbolDescriptor,
    *,
    r: float = 2.0,
    max_distance: int | None = None,
    center: float | None = None,
) -> OffDiagonalReport:
    """Local L^r norms of T_sigma(f, g) on unit windows at integer distance d
    from ``center`` (default: the peak of |f|), with M fitted in
    norm(d) ~ (1 + d)^(-M). Both sides of the center are measured and the
    larger value kept.
    """
    if f.is_zero():
        raise DegenerateInputError("off-diagonal decay needs a nonzero f")
    period = f.grid.period_length
    reach = math.floor(0.5 * period - 0.5 * WINDOW_LENGTH)
    max_distance = reach if max_distance is None else max_distance
    if not 1 <= max_distance <= reach:
        raise ParameterError(f"max_distance must lie in [1, {reach}], got {max_distance}")
    if center is None:
        center = float(f.grid.points[int(np.argmax(np.abs(f.samples)))])

    values = np.asarray(apply_bilinear(f, g, sigma).samples)
    distances = tuple(range(max_distance + 1))
    norms = tuple(
        max(_local_norm(values, f, center + d, r), _local_norm(values, f, center - d, r))
        for d in distances
    )
    positive = [(d, n) for d, n in zip(distances, norms) if n > 0]
    if len(positive) < 2:
        exponent = math.inf
    else:
        ds, ns = zip(*positive)
        slope, _ = np.polyfit(np.log1p(ds), np.log(ns), 1)
        exponent = float(-slope)
    logger.debug(f"off-diagonal decay of {sigma.name}: exponent {exponent:.3g}")
    return OffDiagonalReport(center, distances, norms, exponent)
