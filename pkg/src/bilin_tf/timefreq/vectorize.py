"""Vectorized tri-tile sets and the coefficient arrays built on them.

vec_j(s) holds the tri-tiles sharing the j-tile (I_s, omega_{s_j});
vec_jl(s) is the union of vec_l(t) over t in vec_j(s).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from bilin_tf.errors import ParameterError, ShapeError, StateError
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.timefreq.collection import TileCollection
from bilin_tf.timefreq.wave_packet import PacketBank


@dataclass(frozen=True)
class VectorizedSet:
    """Members (indices into a collection) of vec_j(base) or vec_jl(base)."""

    base: int
    components: tuple[int, ...]
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)


def check_components(j: int, l: int) -> None:
    if {j, l} != {1, 2}:
        raise ParameterError(f"component pair must be (1, 2) or (2, 1), got ({j}, {l})")


def vectorize(tc: TileCollection, s: int, j: int) -> VectorizedSet:
    members = tc.component_groups[j][tc[s].tile(j)]
    return VectorizedSet(s, (j,), members)


def vectorize_pair(tc: TileCollection, s: int, j: int, l: int) -> VectorizedSet:
    labels_j, labels_l = tc.component_labels[j], tc.component_labels[l]
    inner = np.unique(labels_l[labels_j == labels_j[s]])
    members = np.flatnonzero(np.isin(labels_l, inner))
    return VectorizedSet(s, (j, l), tuple(int(i) for i in members))


def pair_group_totals(tc: TileCollection, j: int, l: int, weights: np.ndarray) -> np.ndarray:
    """For each tri-tile s, the sum of ``weights`` over vec_jl(s)."""
    labels_j, labels_l = tc.component_labels[j], tc.component_labels[l]
    l_totals = np.bincount(labels_l, weights=weights)
    pairs = np.unique(np.stack([labels_j, labels_l], axis=1), axis=0)
    j_totals = np.bincount(pairs[:, 0], weights=l_totals[pairs[:, 1]])
    return j_totals[labels_j]


def group_totals(tc: TileCollection, l: int, weights: np.ndarray) -> np.ndarray:
    """For each tri-tile s, the sum of ``weights`` over vec_l(s)."""
    labels = tc.component_labels[l]
    return np.bincount(labels, weights=weights)[labels]


def _bank(tc: TileCollection) -> PacketBank:
    if tc.packets is None:
        raise StateError("tile collection has no wave packets; call with_packets(grid) first")
    return tc.packets


def component_coefficients(f: SampledFunction, tc: TileCollection, j: int) -> np.ndarray:
    """<f, phi_{s_j}> for every tri-tile s."""
    if not len(tc):
        return np.zeros(0, dtype=np.complex128)
    return _bank(tc).coefficients(f, tc.tiles(j))


def sequence_coefficients(h: Sequence[SampledFunction], tc: TileCollection) -> np.ndarray:
    """<h_n, phi_{s_3}> for every s in Q_n."""
    if len(h) != len(tc.strips):
        raise ShapeError(f"got {len(h)} functions for {len(tc.strips)} strips")
    out = np.zeros(len(tc), dtype=np.complex128)
    if not len(tc):
        return out
    bank = _bank(tc)
    tiles = tc.tiles(3)
    for n, function in enumerate(h):
        members = tc.strip_members(n)
        if members:
            out[list(members)] = bank.coefficients(function, [tiles[i] for i in members])
    return out
