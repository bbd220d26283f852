"""The trilinear form int T(f, g) h and its frequency-side expression."""

from __future__ import annotations

import numpy as np

from bilin_tf.errors import GridError
from bilin_tf.grid.sampled import SampledFunction, forward_transform
from bilin_tf.multiplier.bilinear import apply_bilinear
from bilin_tf.multiplier.symbols import Arity, SymbolDescriptor, lift_diagonal

ORACLE_ROW_BLOCK = 256


def trilinear_pairing(
    f: SampledFunction, g: SampledFunction, h: SampledFunction, s: SymbolDescriptor
) -> complex:
    """(L/N) * sum_j T(f, g)(x_j) h(x_j)."""
    if h.grid != f.grid:
        raise GridError(f"grid mismatch: {f.grid} vs {h.grid}")
    t = apply_bilinear(f, g, s)
    return complex(f.grid.spatial_step * np.sum(t.samples * h.samples))


def frequency_side_pairing(
    f: SampledFunction, g: SampledFunction, h: SampledFunction, s: SymbolDescriptor
) -> complex:
    """(1/L^2) sum_{k,l} c_k(f) c_l(g) s(xi_k, xi_l) c_{-(k+l)}(h).

    The constraint xi_1 + xi_2 + xi_3 = 0 is taken modulo the grid period.
    """
    if s.arity is Arity.BILINEAR_DIAGONAL:
        s = lift_diagonal(s)
    s.require(Arity.BILINEAR_GENERAL)
    grid = f.grid
    grid.require_same(g.grid, h.grid)
    n = grid.sample_count
    fc, gc, hc = forward_transform(f), forward_transform(g), forward_transform(h)
    k = grid.frequency_indices
    xi = grid.frequencies
    total = 0.0 + 0.0j
    for start in range(0, n, ORACLE_ROW_BLOCK):
        rows = slice(start, start + ORACLE_ROW_BLOCK)
        matrix = s(xi[rows, None], xi[None, :])
        partner = hc[(-(k[rows, None] + k[None, :])) % n]
        total += np.sum(fc[rows, None] * gc[None, :] * matrix * partner)
    return complex(total / grid.period_length**2)
