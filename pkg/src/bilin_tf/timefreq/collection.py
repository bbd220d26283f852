"""Collections of tri-tiles with their grid certificates."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np

from bilin_tf.errors import AssumptionError, ParameterError
from bilin_tf.intervals.collection import IntervalCollection, max_overlap
from bilin_tf.intervals.interval import Interval
from bilin_tf.timefreq.tiles import Component, Tile, TriTile

if TYPE_CHECKING:
    from bilin_tf.grid.spec import GridSpec
    from bilin_tf.timefreq.wave_packet import PacketBank

logger = logging.getLogger(__name__)

# accepted per-scale overlap of the space intervals
SPACE_GRID_MAX_OVERLAP = 4


@dataclass(frozen=True)
class SparsenessParams:
    """Sparseness constants: the literal ones are kept for reference only.

    Intervals of equivalent scale (length ratio within ``scale_ratio``) must
    coincide or have disjoint ``resolved_dilate``-dilates.
    """

    dilate: float = 1e5
    scale_gap: float = 1e9
    resolved_dilate: float = 2.0
    scale_ratio: float = 2.0


@dataclass(frozen=True)
class GridCertificate:
    family: str
    per_scale: tuple[tuple[int, int], ...]
    nesting_violations: int = 0

    @property
    def overlap(self) -> int:
        return max((count for _, count in self.per_scale), default=0)


def grid_certificate(family: str, intervals: Iterable[Interval]) -> GridCertificate:
    """Per-scale overlap of distinct intervals with 2^(k-1) <= |I| <= 2^(k+1)."""
    distinct = sorted(set(intervals))
    if not distinct:
        return GridCertificate(family, ())
    lengths = np.array([w.length for w in distinct])
    los = np.array([w.lo for w in distinct])
    his = np.array([w.hi for w in distinct])
    k_min = math.floor(math.log2(lengths.min())) - 1
    k_max = math.ceil(math.log2(lengths.max())) + 1
    per_scale = []
    for k in range(k_min, k_max + 1):
        band = (lengths >= 2.0 ** (k - 1)) & (lengths <= 2.0 ** (k + 1))
        if band.any():
            per_scale.append((k, max_overlap(los[band], his[band], closed=False)))
    return GridCertificate(family, tuple(per_scale))


def nesting_violations(tritiles: Sequence[TriTile], strips: IntervalCollection) -> int:
    """Count (omega', s) pairs where some omega_{s_i} is strictly inside omega'
    but another component of s is not inside it."""
    family = {w for s in tritiles for w in s.freqs} | {strips[s.strip_index] for s in tritiles}
    if not family:
        return 0
    outer = sorted(family)
    o_lo = np.array([w.lo for w in outer])[:, None]
    o_hi = np.array([w.hi for w in outer])[:, None]
    slack = 1e-12 * max(np.abs(o_lo).max(), np.abs(o_hi).max(), 1.0)
    inside = []
    strict = []
    for component in range(3):
        c_lo = np.array([s.freqs[component].lo for s in tritiles])[None, :]
        c_hi = np.array([s.freqs[component].hi for s in tritiles])[None, :]
        contained = (c_lo >= o_lo - slack) & (c_hi <= o_hi + slack)
        equal = (np.abs(c_lo - o_lo) <= slack) & (np.abs(c_hi - o_hi) <= slack)
        inside.append(contained)
        strict.append(contained & ~equal)
    violations = (strict[0] | strict[1] | strict[2]) & ~(inside[0] & inside[1] & inside[2])
    return int(violations.sum())


@dataclass(frozen=True, eq=False)
class TileCollection:
    tritiles: tuple[TriTile, ...]
    strips: IntervalCollection
    sparseness: SparsenessParams = field(default_factory=SparsenessParams)
    packets: PacketBank | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "tritiles", tuple(self.tritiles))
        for s in self.tritiles:
            if not 0 <= s.strip_index < len(self.strips):
                raise ParameterError(
                    f"strip index {s.strip_index} outside a collection of {len(self.strips)} strips"
                )
        space = self.certificates[0]
        if space.overlap > SPACE_GRID_MAX_OVERLAP:
            raise AssumptionError(
                f"space intervals overlap {space.overlap} times at one scale"
                f" (limit {SPACE_GRID_MAX_OVERLAP})"
            )

    def __len__(self) -> int:
        return len(self.tritiles)

    def __iter__(self) -> Iterator[TriTile]:
        return iter(self.tritiles)

    def __getitem__(self, index: int) -> TriTile:
        return self.tritiles[index]

    @cached_property
    def certificates(self) -> tuple[GridCertificate, GridCertificate]:
        """(space grid, frequency grid with nesting violations), recorded not enforced."""
        space = grid_certificate("space", (s.space for s in self.tritiles))
        frequency = grid_certificate(
            "frequency",
            [w for s in self.tritiles for w in s.freqs]
            + [self.strips[s.strip_index] for s in self.tritiles],
        )
        violations = nesting_violations(self.tritiles, self.strips)
        return space, GridCertificate(frequency.family, frequency.per_scale, violations)

    @cached_property
    def component_groups(self) -> dict[int, dict[Tile, tuple[int, ...]]]:
        """For j = 1, 2, 3: component tile -> indices of tri-tiles sharing it."""
        groups: dict[int, dict[Tile, list[int]]] = {1: {}, 2: {}, 3: {}}
        for index, s in enumerate(self.tritiles):
            for component in (1, 2, 3):
                groups[component].setdefault(s.tile(component), []).append(index)
        return {j: {tile: tuple(ix) for tile, ix in g.items()} for j, g in groups.items()}

    @cached_property
    def component_labels(self) -> dict[int, np.ndarray]:
        """Integer group label per tri-tile for each component j."""
        labels = {}
        for j, groups in self.component_groups.items():
            label = np.empty(len(self.tritiles), dtype=np.int64)
            for group_id, members in enumerate(groups.values()):
                label[list(members)] = group_id
            label.setflags(write=False)
            labels[j] = label
        return labels

    @cached_property
    def space_lengths(self) -> np.ndarray:
        lengths = np.array([s.space.length for s in self.tritiles], dtype=float)
        lengths.setflags(write=False)
        return lengths

    @cached_property
    def strip_indices(self) -> np.ndarray:
        indices = np.array([s.strip_index for s in self.tritiles], dtype=np.int64)
        indices.setflags(write=False)
        return indices

    def tiles(self, component: Component) -> list[Tile]:
        return [s.tile(component) for s in self.tritiles]

    def strip_members(self, n: int) -> tuple[int, ...]:
        """Indices of Q_n."""
        return tuple(int(i) for i in np.flatnonzero(self.strip_indices == n))

    def subset(self, indices: Iterable[int]) -> TileCollection:
        chosen = sorted(set(int(i) for i in indices))
        return TileCollection(
            tuple(self.tritiles[i] for i in chosen), self.strips, self.sparseness, self.packets
        )

    def with_packets(self, grid: GridSpec) -> TileCollection:
        from bilin_tf.timefreq.wave_packet import PacketBank

        bank = self.packets or PacketBank(grid)
        bank.build(tile for s in self.tritiles for tile in (s.tile(1), s.tile(2), s.tile(3)))
        return TileCollection(self.tritiles, self.strips, self.sparseness, bank)
