"""Named symbol presets for experiments."""

from __future__ import annotations

import math
from collections.abc import Mapping
from enum import StrEnum
from typing import Any

import numpy as np

from bilin_tf.errors import ParameterError
from bilin_tf.grid.spec import GridSpec
from bilin_tf.intervals.bump import make_bump
from bilin_tf.intervals.interval import Interval
from bilin_tf.multiplier.symbols import StripSupport, general_symbol
from bilin_tf.pseudo.directional import DirectionalSymbol


class SymbolPreset(StrEnum):
    GAUSSIAN_RIDGE = "gaussian_ridge"
    COMPACT_BUMP_RIDGE = "compact_bump_ridge"
    RANDOM_TRANSLATE_SERIES = "random_translate_series"
    HILBERT_RIDGE = "hilbert_ridge"


PRESET_DEFAULTS: dict[SymbolPreset, dict[str, Any]] = {
    SymbolPreset.GAUSSIAN_RIDGE: {"angle": math.pi / 2, "width": 1.0, "s": 1.5},
    SymbolPreset.COMPACT_BUMP_RIDGE: {"angle": math.pi / 2, "low": 0.2, "high": 0.8, "s": 1.5},
    SymbolPreset.RANDOM_TRANSLATE_SERIES: {
        "angle": math.pi / 2,
        "terms": 8,
        "spread": 6,
        "seed": 0,
        "s": 1.5,
    },
    SymbolPreset.HILBERT_RIDGE: {"angle": math.pi / 2, "width": 1.0, "s": 1.5},
}


def gaussian_ridge(
    angle: float, width: float = 1.0, s: float = 1.5, grid: GridSpec | None = None, **options: Any
) -> DirectionalSymbol:
    """m(v) = exp(-(<v, theta>/width)^2), with its exact gradient."""
    if not width > 0:
        raise ParameterError(f"width must be positive, got {width}")
    c, d = math.cos(angle), math.sin(angle)

    def evaluate(xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
        return np.exp(-(((c * xi + d * eta) / width) ** 2))

    def gradient(xi: np.ndarray, eta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        lam = c * xi + d * eta
        slope = -2 * lam / width**2 * np.exp(-((lam / width) ** 2))
        return c * slope, d * slope

    symbol = general_symbol(evaluate, gradient=gradient, name=f"gaussian_ridge({width:g})")
    return DirectionalSymbol(symbol, angle, s, grid or GridSpec(), **options)


def compact_bump_ridge(
    angle: float,
    low: float = 0.2,
    high: float = 0.8,
    s: float = 1.5,
    grid: GridSpec | None = None,
    **options: Any,
) -> DirectionalSymbol:
    """m(v) = chi_[low, high](<v, theta>) with a flat-top bump."""
    interval = Interval.from_endpoints(low, high)
    bump = make_bump(interval)
    c, d = math.cos(angle), math.sin(angle)
    symbol = general_symbol(
        lambda xi, eta: bump(c * xi + d * eta),
        support_hint=StripSupport(interval, c, d),
        name=f"bump_ridge[{low:g},{high:g}]",
    )
    return DirectionalSymbol(symbol, angle, s, grid or GridSpec(), **options)


def random_translate_series(
    angle: float,
    terms: int = 8,
    spread: int = 6,
    seed: int = 0,
    s: float = 1.5,
    grid: GridSpec | None = None,
    **options: Any,
) -> DirectionalSymbol:
    """A real sum of bumps a_j chi_j(<v, theta>) at random integer centers in
    [-spread, spread], widths in [0.5, 2] and amplitudes in [-1, 1]."""
    if terms < 1:
        raise ParameterError(f"need at least one term, got {terms}")
    rng = np.random.default_rng(seed)
    centers = rng.integers(-spread, spread + 1, size=terms)
    widths = rng.uniform(0.5, 2.0, size=terms)
    amplitudes = rng.uniform(-1.0, 1.0, size=terms)
    bumps = [make_bump(Interval(float(ce), float(w)), 0.3) for ce, w in zip(centers, widths)]
    c, d = math.cos(angle), math.sin(angle)

    def evaluate(xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
        lam = c * xi + d * eta
        return sum(a * bump(lam) for a, bump in zip(amplitudes, bumps))

    lo = float(min(b.interval.lo for b in bumps))
    hi = float(max(b.interval.hi for b in bumps))
    symbol = general_symbol(
        evaluate,
        support_hint=StripSupport(Interval.from_endpoints(lo, hi), c, d),
        name=f"translate_series(seed={seed})",
    )
    return DirectionalSymbol(symbol, angle, s, grid or GridSpec(), **options)


def hilbert_ridge(
    angle: float, width: float = 1.0, s: float = 1.5, grid: GridSpec | None = None, **options: Any
) -> DirectionalSymbol:
    """Smoothed -i sgn(<v, theta>): bounded with all derivatives but not L^s along theta."""
    if not width > 0:
        raise ParameterError(f"width must be positive, got {width}")
    c, d = math.cos(angle), math.sin(angle)

    def evaluate(xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
        return -1j * np.tanh((c * xi + d * eta) / width)

    def gradient(xi: np.ndarray, eta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        slope = -1j / width / np.cosh((c * xi + d * eta) / width) ** 2
        return c * slope, d * slope

    symbol = general_symbol(evaluate, gradient=gradient, name=f"hilbert_ridge({width:g})")
    return DirectionalSymbol(symbol, angle, s, grid or GridSpec(), **options)


_BUILDERS = {
    SymbolPreset.GAUSSIAN_RIDGE: gaussian_ridge,
    SymbolPreset.COMPACT_BUMP_RIDGE: compact_bump_ridge,
    SymbolPreset.RANDOM_TRANSLATE_SERIES: random_translate_series,
    SymbolPreset.HILBERT_RIDGE: hilbert_ridge,
}


def build_symbol_preset(
    preset: SymbolPreset | str,
    params: Mapping[str, Any] | None = None,
    grid: GridSpec | None = None,
) -> DirectionalSymbol:
    try:
        preset = SymbolPreset(preset)
    except ValueError:
        raise ParameterError(f"unknown symbol preset {preset!r}") from None
    defaults = PRESET_DEFAULTS[preset]
    unknown = set(params or {}) - set(defaults) - {"window", "t_points"}
    if unknown:
        raise ParameterError(f"unknown parameters for {preset}: {sorted(unknown)}")
    arguments = defaults | dict(params or {})
    return _BUILDERS[preset](grid=grid, **arguments)
