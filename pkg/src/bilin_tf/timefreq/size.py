"""Size of a function relative to a tri-tile collection."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.timefreq.collection import TileCollection
from bilin_tf.timefreq.vectorize import (
    check_components,
    component_coefficients,
    group_totals,
    pair_group_totals,
    sequence_coefficients,
)


@dataclass(frozen=True)
class SizeResult:
    value: float
    argmax: int | None


def _supremum(tc: TileCollection, sums: np.ndarray) -> SizeResult:
    if not len(tc):
        return SizeResult(0.0, None)
    values = np.sqrt(np.maximum(sums, 0.0) / tc.space_lengths)
    argmax = int(np.argmax(values))
    return SizeResult(float(values[argmax]), argmax)


def size_vec(f: SampledFunction, tc: TileCollection, j: int, l: int) -> SizeResult:
    """sup_s |I_s|^{-1/2} (sum over s' in vec_l(s) of |<f, phi_{s'_j}>|^2)^{1/2}."""
    check_components(j, l)
    if not len(tc):
        return SizeResult(0.0, None)
    weights = np.abs(component_coefficients(f, tc, j)) ** 2
    return _supremum(tc, group_totals(tc, l, weights))


def sequence_weights(h: Sequence[SampledFunction], tc: TileCollection) -> np.ndarray:
    return np.abs(sequence_coefficients(h, tc)) ** 2


def size_seq(h: Sequence[SampledFunction], tc: TileCollection, j: int, l: int) -> SizeResult:
    """sup_s |I_s|^{-1/2} (sum over s' in vec_jl(s) of |<h_n(s'), phi_{s'_3}>|^2)^{1/2}."""
    check_components(j, l)
    weights = sequence_weights(h, tc)
    if not len(tc):
        return SizeResult(0.0, None)
    return _supremum(tc, pair_group_totals(tc, j, l, weights))
