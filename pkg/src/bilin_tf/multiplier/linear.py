from __future__ import annotations

from bilin_tf.grid.sampled import SampledFunction, forward_transform, inverse_transform
from bilin_tf.multiplier.symbols import Arity, SymbolDescriptor


def linear_multiplier(f: SampledFunction, s: SymbolDescriptor) -> SampledFunction:
    """Multiply the spectrum of ``f`` by s(xi_k) and transform back."""
    s.require(Arity.LINEAR_1D)
    return inverse_transform(f.grid, s(f.grid.frequencies) * forward_transform(f))
