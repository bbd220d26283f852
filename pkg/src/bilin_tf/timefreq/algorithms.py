"""Energy-decrement steps that peel trees off a tri-tile collection.

A step at level d requires size <= 2^-d E. It repeatedly takes the tri-tile
with the largest remaining mass above a quarter of (2^-d E)^2 |I_s|, removes
the tree grown from it, and stops when no tri-tile qualifies, leaving a
remainder whose size is at most 2^-(d+1) E.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from bilin_tf.errors import PreconditionError
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.timefreq.collection import TileCollection
from bilin_tf.timefreq.energy import energy_seq, energy_vec, strongly_disjoint
from bilin_tf.timefreq.size import sequence_weights, size_seq, size_vec
from bilin_tf.timefreq.vectorize import VectorizedSet, check_components, component_coefficients

logger = logging.getLogger(__name__)

PRECONDITION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DecrementAudit:
    size_before: float
    size_after: float
    size_limit: float
    c_alg: float
    strongly_disjoint: bool | None
    disjoint_union: bool

    @property
    def partition_passed(self) -> bool:
        """Size halving and the disjoint split into remainder and trees."""
        return self.size_after <= self.size_limit * (1 + PRECONDITION_TOLERANCE) and self.disjoint_union

    @property
    def passed(self) -> bool:
        return self.partition_passed and self.strongly_disjoint is not False


@dataclass(frozen=True)
class DecrementResult:
    remainder: TileCollection
    remainder_indices: tuple[int, ...]
    trees: tuple[VectorizedSet, ...]
    seeds: tuple[VectorizedSet, ...]
    energy: float
    audit: DecrementAudit


def _check_precondition(size: float, energy: float, d: int) -> float:
    threshold = 2.0**-d * energy
    if size > threshold * (1 + PRECONDITION_TOLERANCE):
        raise PreconditionError(
            f"size {size:.6g} exceeds 2^-{d} x energy = {threshold:.6g}"
        )
    return threshold


def _select_order_key(tc: TileCollection) -> np.ndarray:
    """Rank of each tri-tile under (strip index, space center, position)."""
    centers = np.array([s.space.center for s in tc])
    order = np.lexsort((np.arange(len(tc)), centers, tc.strip_indices))
    rank = np.empty(len(tc), dtype=np.int64)
    rank[order] = np.arange(len(tc))
    return rank


def _peel(
    tc: TileCollection,
    threshold: float,
    mass_within: Callable[[np.ndarray], np.ndarray],
    grow: Callable[[int, np.ndarray], tuple[np.ndarray, np.ndarray]],
) -> tuple[np.ndarray, list[tuple[int, np.ndarray, np.ndarray]]]:
    remaining = np.ones(len(tc), dtype=bool)
    rank = _select_order_key(tc)
    lengths = tc.space_lengths
    selected = []
    while remaining.any():
        mass = mass_within(remaining)
        eligible = remaining & (mass >= 0.25 * threshold**2 * lengths) & (mass > 0)
        if not eligible.any():
            break
        best = mass[eligible].max()
        tied = np.flatnonzero(eligible & (mass == best))
        seed = int(tied[np.argmin(rank[tied])])
        seed_members, tree = grow(seed, remaining)
        selected.append((seed, seed_members, tree))
        remaining &= ~tree
    return remaining, selected


def _finish(
    tc: TileCollection,
    remaining: np.ndarray,
    selected: list[tuple[int, np.ndarray, np.ndarray]],
    components: tuple[int, int],
    seed_component: int,
    energy: float,
    d: int,
    size_before: float,
    measure_after: Callable[[TileCollection], float],
    disjointness_component: int | None,
) -> DecrementResult:
    remainder_indices = np.flatnonzero(remaining)
    remainder = tc.subset(remainder_indices)
    trees = tuple(
        VectorizedSet(seed, components, tuple(int(i) for i in np.flatnonzero(tree)))
        for seed, _, tree in selected
    )
    seeds = tuple(
        VectorizedSet(seed, (seed_component,), tuple(int(i) for i in np.flatnonzero(members)))
        for seed, members, _ in selected
    )

    cover = np.zeros(len(tc), dtype=np.int64)
    cover[remainder_indices] += 1
    for tree in trees:
        cover[list(tree.members)] += 1
    total_space = sum(tc[seed].space.length for seed, _, _ in selected)
    audit = DecrementAudit(
        size_before=size_before,
        size_after=measure_after(remainder),
        size_limit=2.0 ** -(d + 1) * energy,
        c_alg=total_space / 4.0**d,
        strongly_disjoint=(
            None
            if disjointness_component is None
            else strongly_disjoint(tc, seeds, disjointness_component)
        ),
        disjoint_union=bool(np.all(cover == 1)),
    )
    if not audit.passed:
        logger.warning(f"decrement audit failed at level {d}: {audit}")
    return DecrementResult(
        remainder, tuple(int(i) for i in remainder_indices), trees, seeds, energy, audit
    )


def energy_decrement(
    f: SampledFunction,
    tc: TileCollection,
    j: int,
    l: int,
    d: int,
    energy: float | None = None,
) -> DecrementResult:
    """Remove trees vec_lj(s) until size_vec(f) drops to 2^-(d+1) E.

    ``energy`` overrides the greedy energy of f on ``tc``.
    """
    check_components(j, l)
    if energy is None:
        energy = energy_vec(f, tc, j, l).value
    size_before = size_vec(f, tc, j, l).value
    threshold = _check_precondition(size_before, energy, d)
    if not len(tc):
        return _finish(tc, np.zeros(0, dtype=bool), [], (l, j), l, energy, d, 0.0, lambda _: 0.0, j)

    weights = np.abs(component_coefficients(f, tc, j)) ** 2
    labels_j, labels_l = tc.component_labels[j], tc.component_labels[l]

    def mass_within(remaining: np.ndarray) -> np.ndarray:
        totals = np.bincount(labels_l, weights=weights * remaining, minlength=labels_l.max() + 1)
        return totals[labels_l]

    def grow(seed: int, remaining: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        members = remaining & (labels_l == labels_l[seed])
        tree = remaining & np.isin(labels_j, labels_j[members])
        return members, tree

    remaining, selected = _peel(tc, threshold, mass_within, grow)
    result = _finish(
        tc,
        remaining,
        selected,
        (l, j),
        l,
        energy,
        d,
        size_before,
        lambda rest: size_vec(f, rest, j, l).value,
        j,
    )
    logger.debug(f"decrement ({j},{l}) at level {d}: {len(result.trees)} trees removed")
    return result


def energy_decrement_seq(
    h: Sequence[SampledFunction],
    tc: TileCollection,
    j: int,
    l: int,
    d: int,
    energy: float | None = None,
) -> DecrementResult:
    """Remove trees vec_jl(s) until size_seq(h) drops to 2^-(d+1) E."""
    check_components(j, l)
    if energy is None:
        energy = energy_seq(h, tc).value
    size_before = size_seq(h, tc, j, l).value
    threshold = _check_precondition(size_before, energy, d)
    if not len(tc):
        return _finish(tc, np.zeros(0, dtype=bool), [], (j, l), j, energy, d, 0.0, lambda _: 0.0, None)

    weights = sequence_weights(h, tc)
    labels_j, labels_l = tc.component_labels[j], tc.component_labels[l]

    def mass_within(remaining: np.ndarray) -> np.ndarray:
        l_totals = np.bincount(labels_l, weights=weights * remaining, minlength=labels_l.max() + 1)
        live = np.flatnonzero(remaining)
        pairs = np.unique(np.stack([labels_j[live], labels_l[live]], axis=1), axis=0)
        j_totals = np.bincount(
            pairs[:, 0], weights=l_totals[pairs[:, 1]], minlength=labels_j.max() + 1
        )
        return j_totals[labels_j]

    def grow(seed: int, remaining: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        members = remaining & (labels_j == labels_j[seed])
        tree = remaining & np.isin(labels_l, labels_l[members])
        return members, tree

    remaining, selected = _peel(tc, threshold, mass_within, grow)
    result = _finish(
        tc,
        remaining,
        selected,
        (j, l),
        j,
        energy,
        d,
        size_before,
        lambda rest: size_seq(h, rest, j, l).value,
        None,
    )
    logger.debug(f"sequence decrement ({j},{l}) at level {d}: {len(result.trees)} trees removed")
    return result
