"""Reproducible random test functions for Monte-Carlo sweeps."""

from __future__ import annotations

import logging
import math
from collections.abc import Mapping
from enum import StrEnum
from typing import Any

import numpy as np

from bilin_tf.errors import ParameterError
from bilin_tf.grid.measurable import MeasurableSet
from bilin_tf.grid.sampled import SampledFunction, inverse_transform
from bilin_tf.grid.spec import GridSpec

logger = logging.getLogger(__name__)


class FunctionFamily(StrEnum):
    GAUSSIAN_PACKET = "gaussian_packet"
    RANDOM_BANDLIMITED = "random_bandlimited"
    INDICATOR_SIGNED = "indicator_signed"


_DEFAULTS: dict[FunctionFamily, dict[str, Any]] = {
    FunctionFamily.GAUSSIAN_PACKET: {"center": 0.0, "width": 1.0, "modulation": 0.0},
    FunctionFamily.RANDOM_BANDLIMITED: {"band_low": -10.0, "band_high": 10.0},
    FunctionFamily.INDICATOR_SIGNED: {"set": None, "interval": None, "phases": "sign"},
}


def _resolve(family: FunctionFamily, params: Mapping[str, Any] | None) -> dict[str, Any]:
    resolved = dict(_DEFAULTS[family])
    unknown = set(params or {}) - set(resolved)
    if unknown:
        raise ParameterError(
            f"unknown parameters for {family.value}: {sorted(unknown)}"
        )
    resolved.update(params or {})
    return resolved


def periodized_gaussian(
    grid: GridSpec, center: float, width: float, modulation: float = 0.0
) -> np.ndarray:
    """Samples of sum_m exp(-(x - a + mL)^2 / 2 sigma^2) e^{ibx}."""
    if not width > 0:
        raise ParameterError(f"gaussian width must be positive, got {width}")
    x = np.asarray(grid.points)
    period = grid.period_length
    images = math.ceil(12.0 * width / period) + 1
    envelope = np.zeros_like(x)
    for m in range(-images, images + 1):
        envelope += np.exp(-((x - center + m * period) ** 2) / (2.0 * width**2))
    return envelope * np.exp(1j * modulation * x)


def _gaussian_packet(grid: GridSpec, params: dict[str, Any]) -> SampledFunction:
    samples = periodized_gaussian(
        grid, float(params["center"]), float(params["width"]), float(params["modulation"])
    )
    return SampledFunction(grid, samples)


def _random_bandlimited(
    grid: GridSpec, params: dict[str, Any], rng: np.random.Generator
) -> SampledFunction:
    mask = grid.band_mask(float(params["band_low"]), float(params["band_high"]))
    count = int(mask.sum())
    if count == 0:
        raise ParameterError(
            f"band [{params['band_low']}, {params['band_high']}] holds no grid frequency"
        )
    # draw in increasing-k order so a band extension keeps earlier modes stable
    order = np.argsort(grid.frequency_indices[mask], kind="stable")
    draws = (rng.standard_normal(count) + 1j * rng.standard_normal(count)) / math.sqrt(2.0)
    values = np.empty(count, dtype=np.complex128)
    values[order] = draws
    coefficients = np.zeros(grid.sample_count, dtype=np.complex128)
    coefficients[mask] = values * grid.period_length / math.sqrt(count)
    return inverse_transform(grid, coefficients)


def _indicator_signed(
    grid: GridSpec, params: dict[str, Any], rng: np.random.Generator
) -> SampledFunction:
    support = params["set"]
    if support is None and params["interval"] is not None:
        start, length = params["interval"]
        support = MeasurableSet.interval(grid, float(start), float(length))
    if support is None:
        support = MeasurableSet.full(grid)
    if not isinstance(support, MeasurableSet):
        raise ParameterError("indicator_signed 'set' must be a MeasurableSet")
    grid.require_same(support.grid)

    if params["phases"] == "sign":
        values = rng.choice(np.array([-1.0, 1.0]), size=grid.sample_count)
    elif params["phases"] == "circle":
        values = np.exp(2j * np.pi * rng.random(grid.sample_count))
    else:
        raise ParameterError(f"phases must be 'sign' or 'circle', got {params['phases']!r}")
    return SampledFunction(grid, np.where(support.mask, values, 0.0))


def synthesize_test_function(
    grid: GridSpec,
    family: FunctionFamily | str,
    params: Mapping[str, Any] | None = None,
    rng_seed: int = 0,
) -> SampledFunction:
    """Draw a test function from one of the standard families.

    The result depends only on ``(grid, family, params, rng_seed)``.
    """
    family = FunctionFamily(family)
    resolved = _resolve(family, params)
    rng = np.random.default_rng(rng_seed)
    logger.debug("synthesizing %s with %s (seed %d)", family.value, resolved, rng_seed)
    match family:
        case FunctionFamily.GAUSSIAN_PACKET:
            return _gaussian_packet(grid, resolved)
        case FunctionFamily.RANDOM_BANDLIMITED:
            return _random_bandlimited(grid, resolved, rng)
        case FunctionFamily.INDICATOR_SIGNED:
            return _indicator_signed(grid, resolved, rng)
