"""Splitting a tri-tile collection into sparse sub-collections."""

from __future__ import annotations

import logging

import numpy as np

from bilin_tf.timefreq.collection import SparsenessParams, TileCollection

logger = logging.getLogger(__name__)

# the constant of the sparse-decomposition lemma
EXPECTED_MAX_PARTS = 64


def _conflicts(
    centers_a: np.ndarray,
    lengths_a: np.ndarray,
    centers_b: np.ndarray,
    lengths_b: np.ndarray,
    params: SparsenessParams,
) -> np.ndarray:
    """Equivalent-scale pairs that neither coincide nor have disjoint dilates."""
    ratio = lengths_a[:, None] / lengths_b[None, :]
    equivalent = (ratio >= 1.0 / params.scale_ratio) & (ratio <= params.scale_ratio)
    gap = np.abs(centers_a[:, None] - centers_b[None, :])
    scale = np.maximum(np.abs(centers_a[:, None]) + lengths_a[:, None], 1.0)
    slack = 1e-12 * scale
    equal = (gap <= slack) & (np.abs(lengths_a[:, None] - lengths_b[None, :]) <= slack)
    reach = 0.5 * params.resolved_dilate * (lengths_a[:, None] + lengths_b[None, :])
    separated = gap - reach > slack
    return equivalent & ~equal & ~separated


def conflict_matrix(tc: TileCollection) -> np.ndarray:
    """Symmetric boolean matrix of tri-tile pairs that cannot share a sparse part."""
    count = len(tc)
    params = tc.sparseness
    space_c = np.array([s.space.center for s in tc])
    space_l = np.array([s.space.length for s in tc])
    conflict = _conflicts(space_c, space_l, space_c, space_l, params)

    freq_c = [np.array([s.freqs[i].center for s in tc]) for i in range(3)]
    freq_l = [np.array([s.freqs[i].length for s in tc]) for i in range(3)]
    for a in range(3):
        for b in range(3):
            conflict |= _conflicts(freq_c[a], freq_l[a], freq_c[b], freq_l[b], params)

    # identical copies at distinct positions never share a part
    seen: dict[object, list[int]] = {}
    for index, s in enumerate(tc):
        seen.setdefault(s, []).append(index)
    for copies in seen.values():
        if len(copies) > 1:
            conflict[np.ix_(copies, copies)] = True

    conflict[np.arange(count), np.arange(count)] = False
    return conflict


def is_sparse(tc: TileCollection) -> bool:
    return not conflict_matrix(tc).any()


def sparse_split(tc: TileCollection) -> list[TileCollection]:
    """Greedy first-fit coloring of the conflict graph.

    Tri-tiles are visited by (space center, strip index, omega_1 center); each
    gets the smallest color not used by an already colored conflicting tri-tile.
    """
    if not len(tc):
        return []
    conflict = conflict_matrix(tc)
    if not conflict.any():
        return [tc]

    order = np.lexsort(
        (
            np.array([s.freqs[0].center for s in tc]),
            tc.strip_indices,
            np.array([s.space.center for s in tc]),
        )
    )
    colors = np.full(len(tc), -1, dtype=np.int64)
    for index in order:
        neighbours = colors[conflict[index]]
        used = set(neighbours[neighbours >= 0].tolist())
        color = 0
        while color in used:
            color += 1
        colors[index] = color

    parts = [tc.subset(np.flatnonzero(colors == c)) for c in range(int(colors.max()) + 1)]
    if len(parts) > EXPECTED_MAX_PARTS:
        logger.warning(f"sparse split used {len(parts)} parts (expected at most {EXPECTED_MAX_PARTS})")
    else:
        logger.debug(f"sparse split into {len(parts)} parts")
    return parts
