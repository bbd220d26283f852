"""The discrete model form Lambda_Q and the single-tree estimate."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.timefreq.collection import TileCollection
from bilin_tf.timefreq.size import size_seq, size_vec
from bilin_tf.timefreq.vectorize import (
    VectorizedSet,
    check_components,
    component_coefficients,
    sequence_coefficients,
    vectorize_pair,
)


def model_terms(
    f1: SampledFunction,
    f2: SampledFunction,
    f3: Sequence[SampledFunction],
    tc: TileCollection,
) -> np.ndarray:
    """|I_s|^{-1/2} |<f1, phi_{s_1}> <f2, phi_{s_2}> <f3_n, phi_{s_3}>| per tri-tile."""
    a3 = sequence_coefficients(f3, tc)
    if not len(tc):
        return np.zeros(0)
    a1 = component_coefficients(f1, tc, 1)
    a2 = component_coefficients(f2, tc, 2)
    return np.abs(a1 * a2 * a3) / np.sqrt(tc.space_lengths)


def model_sum(
    f1: SampledFunction,
    f2: SampledFunction,
    f3: Sequence[SampledFunction],
    tc: TileCollection,
) -> float:
    """Lambda_Q as a correctly rounded sum, so the result ignores term order."""
    return math.fsum(model_terms(f1, f2, f3, tc).tolist())


@dataclass(frozen=True)
class TreeEstimate:
    tree: VectorizedSet
    lhs: float
    sizes: tuple[float, float, float]
    rhs: float

    @property
    def ratio(self) -> float:
        if self.rhs > 0:
            return self.lhs / self.rhs
        return 0.0 if self.lhs == 0 else math.inf


def collection_sizes(
    f1: SampledFunction,
    f2: SampledFunction,
    f3: Sequence[SampledFunction],
    tc: TileCollection,
    j: int,
    l: int,
) -> tuple[float, float, float]:
    return (
        size_vec(f1, tc, 1, 2).value,
        size_vec(f2, tc, 2, 1).value,
        size_seq(f3, tc, j, l).value,
    )


def tree_estimate(
    terms: np.ndarray,
    tc: TileCollection,
    seed: int,
    j: int,
    l: int,
    sizes: tuple[float, float, float],
) -> TreeEstimate:
    """Compare Lambda over vec_jl(seed) with |I_seed| times the three sizes."""
    tree = vectorize_pair(tc, seed, j, l)
    lhs = math.fsum(terms[list(tree.members)].tolist())
    rhs = tc[seed].space.length * sizes[0] * sizes[1] * sizes[2]
    return TreeEstimate(tree, lhs, sizes, rhs)


def tritile_estimate(
    f1: SampledFunction,
    f2: SampledFunction,
    f3: Sequence[SampledFunction],
    tc: TileCollection,
    seed: int,
    j: int = 1,
    l: int = 2,
) -> TreeEstimate:
    """Lambda_{vec_jl(seed)} against |I_seed| size_1 size_2 size_3 on ``tc``.

    For collections where a tri-tile is fixed by its first two tiles the ratio
    is at most one.
    """
    check_components(j, l)
    terms = model_terms(f1, f2, f3, tc)
    return tree_estimate(terms, tc, seed, j, l, collection_sizes(f1, f2, f3, tc, j, l))
