"""Modulations and the Hilbert transform on the grid.

Sharp frequency projections can be written through the Hilbert transform:
for a grid interval (a, b),

    pi_(a,b) = (i/2) (M_a H M_-a - M_b H M_-b),

which on the grid equals 1 inside (a, b), 1/2 at the endpoint modes and 0
elsewhere.
"""

from __future__ import annotations

import numpy as np

from bilin_tf.grid.sampled import SampledFunction, forward_transform, inverse_transform


def modulate(f: SampledFunction, a: float) -> SampledFunction:
    """M_a f(x) = e^{iax} f(x) for a grid frequency a (exact spectrum shift)."""
    shift = f.grid.frequency_index(a)
    return inverse_transform(f.grid, np.roll(forward_transform(f), shift))


def hilbert_transform(f: SampledFunction) -> SampledFunction:
    """Multiplier with symbol -i sgn(xi), zero at xi = 0."""
    symbol = -1j * np.sign(f.grid.frequencies)
    return inverse_transform(f.grid, symbol * forward_transform(f))


def interval_projection_via_hilbert(f: SampledFunction, a: float, b: float) -> SampledFunction:
    """(i/2)(M_a H M_-a f - M_b H M_-b f)."""
    left = modulate(hilbert_transform(modulate(f, -a)), a)
    right = modulate(hilbert_transform(modulate(f, -b)), b)
    coefficients = 0.5j * (forward_transform(left) - forward_transform(right))
    return inverse_transform(f.grid, coefficients)
