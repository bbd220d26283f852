from __future__ import annotations

import math

import numpy as np

from bilin_tf.errors import ParameterError
from bilin_tf.grid.sampled import SampledFunction, forward_transform
from bilin_tf.grid.spec import GridSpec


def _check_exponent(p: float) -> None:
    if not (p > 0 or p == math.inf) or math.isnan(p):
        raise ParameterError(f"exponent must be positive or inf, got {p}")


def lp_norm_values(values: np.ndarray, grid: GridSpec, p: float) -> float:
    """Riemann-sum L^p norm of raw samples on ``grid``."""
    _check_exponent(p)
    magnitudes = np.abs(np.asarray(values))
    if p == math.inf:
        return float(magnitudes.max(initial=0.0))
    peak = magnitudes.max(initial=0.0)
    if peak == 0.0:
        return 0.0
    # scale by the peak so large p does not overflow
    total = grid.spatial_step * np.sum((magnitudes / peak) ** p)
    return float(peak * total ** (1.0 / p))


def lp_norm(f: SampledFunction, p: float) -> float:
    """((L/N) * sum_j |f(x_j)|^p)^(1/p), or max_j |f(x_j)| for p = inf."""
    return lp_norm_values(f.samples, f.grid, p)


def spectral_l2_norm(f: SampledFunction) -> float:
    """L^2 norm computed on the frequency side, (1/L * sum |c_k|^2)^(1/2)."""
    c = forward_transform(f)
    return math.sqrt(float(np.sum(np.abs(c) ** 2)) / f.grid.period_length)
