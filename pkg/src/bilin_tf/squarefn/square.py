from __future__ import annotations

import logging

import numpy as np

from bilin_tf.errors import DegenerateInputError, DisjointnessError
from bilin_tf.grid.exponents import ExponentTriple
from bilin_tf.grid.norms import lp_norm
from bilin_tf.grid.sampled import SampledFunction, forward_transform
from bilin_tf.multiplier.bilinear import apply_bilinear
from bilin_tf.multiplier.linear import linear_multiplier
from bilin_tf.squarefn.spec import CutoffMode, SquareFunctionSpec

logger = logging.getLogger(__name__)


def _aggregate(f: SampledFunction, pieces) -> SampledFunction:
    # pieces are reduced in collection order for reproducible sums
    total = np.zeros(f.grid.sample_count)
    for piece in pieces:
        total += np.abs(piece.samples) ** 2
    return SampledFunction(f.grid, np.sqrt(total))


def linear_square_function(f: SampledFunction, spec: SquareFunctionSpec) -> SampledFunction:
    """x -> (sum_n |pi_{omega_n} f(x)|^2)^(1/2), or the smooth variant."""
    if spec.cutoff_mode is CutoffMode.SHARP and not spec.collection.pairwise_disjoint():
        raise DisjointnessError("sharp square function needs pairwise disjoint intervals")
    forward_transform(f)
    return _aggregate(f, (linear_multiplier(f, s) for s in spec.linear_symbols()))


def bilinear_square_function(
    f: SampledFunction, g: SampledFunction, spec: SquareFunctionSpec
) -> SampledFunction:
    """S_Omega(f, g) = (sum_omega |T_{chi_omega}(f, g)|^2)^(1/2)."""
    if not spec.relaxed:
        spec.collection.require_assumption()
    f.grid.require_same(g.grid)
    # both spectra are computed once and shared by every piece
    forward_transform(f)
    forward_transform(g)
    return _aggregate(f, (apply_bilinear(f, g, s) for s in spec.bilinear_symbols()))


def norm_ratio(
    f: SampledFunction, g: SampledFunction, spec: SquareFunctionSpec, e: ExponentTriple
) -> float:
    """||S_Omega(f, g)||_r / (||f||_p ||g||_q)."""
    denominator = lp_norm(f, e.p) * lp_norm(g, e.q)
    if denominator == 0:
        raise DegenerateInputError("norm ratio with a vanishing input norm")
    if not e.local_l2:
        logger.warning(
            "exponents (%g, %g, %g) are outside the local L^2 range; ratios may be unbounded",
            e.p,
            e.q,
            e.r,
        )
    return lp_norm(bilinear_square_function(f, g, spec), e.r) / denominator
