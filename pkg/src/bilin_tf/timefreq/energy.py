"""Energy of a function relative to a tri-tile collection."""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from bilin_tf.errors import SizeGuardError
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.timefreq.collection import TileCollection
from bilin_tf.timefreq.size import sequence_weights
from bilin_tf.timefreq.vectorize import VectorizedSet, check_components, component_coefficients

logger = logging.getLogger(__name__)

ENERGY_LEVELS = range(-40, 41)
EXHAUSTIVE_MAX_CANDIDATES = 12


class EnergyMode(StrEnum):
    GREEDY = "greedy"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class EnergyResult:
    value: float
    level: int | None
    family: tuple[VectorizedSet, ...]
    mode: EnergyMode = EnergyMode.GREEDY


def _pair_tables(tc: TileCollection, j: int) -> tuple[np.ndarray, np.ndarray]:
    """(j-tiles share interior, 2-dilates of omega_{s_j} meet) for all pairs."""
    space_lo = np.array([s.space.lo for s in tc])
    space_hi = np.array([s.space.hi for s in tc])
    w_c = np.array([s.freqs[j - 1].center for s in tc])
    w_l = np.array([s.freqs[j - 1].length for s in tc])
    scale = max(np.abs(space_lo).max(), np.abs(space_hi).max(), np.abs(w_c).max() + w_l.max(), 1.0)
    slack = 1e-12 * scale

    space_common = np.minimum(space_hi[:, None], space_hi[None, :]) - np.maximum(
        space_lo[:, None], space_lo[None, :]
    )
    w_lo, w_hi = w_c - 0.5 * w_l, w_c + 0.5 * w_l
    freq_common = np.minimum(w_hi[:, None], w_hi[None, :]) - np.maximum(w_lo[:, None], w_lo[None, :])
    tiles_overlap = (space_common > slack) & (freq_common > slack)

    d_lo, d_hi = w_c - w_l, w_c + w_l
    dilates_meet = np.minimum(d_hi[:, None], d_hi[None, :]) - np.maximum(d_lo[:, None], d_lo[None, :]) >= -slack
    return tiles_overlap, dilates_meet


def _compatibility(
    tc: TileCollection, j: int, groups: Sequence[Sequence[int]], bases: Sequence[int]
) -> np.ndarray:
    """Pairwise strong j-disjointness of index sets whose members share the base's I."""
    count = len(groups)
    if count == 0:
        return np.ones((0, 0), dtype=bool)
    tiles_overlap, dilates_meet = _pair_tables(tc, j)
    membership = np.zeros((count, len(tc)))
    for g, members in enumerate(groups):
        membership[g, list(members)] = 1.0
    overlap_hits = membership @ tiles_overlap.astype(float) @ membership.T > 0
    meet_hits = membership @ dilates_meet.astype(float) @ membership.T > 0
    base_spaces = [tc[b].space for b in bases]
    spaces_overlap = np.array([[a.overlaps(b) for b in base_spaces] for a in base_spaces])
    compatible = ~overlap_hits & (~meet_hits | ~spaces_overlap)
    np.fill_diagonal(compatible, True)
    return compatible


def strongly_disjoint(tc: TileCollection, family: Sequence[VectorizedSet], j: int) -> bool:
    """Every pair of distinct sets in the family is strongly j-disjoint."""
    if len(family) < 2:
        return True
    compatible = _compatibility(tc, j, [v.members for v in family], [v.base for v in family])
    return bool(compatible.all())


def admissible_levels(mass: float, length: float) -> list[int]:
    """Levels k with 4^k |I| <= mass <= 4^(k+1) |I|."""
    if mass <= 0:
        return []
    ratio = mass / length
    k = math.floor(math.log(ratio, 4))
    levels = [level for level in (k - 1, k, k + 1) if 4.0**level <= ratio <= 4.0 ** (level + 1)]
    return [level for level in levels if level in ENERGY_LEVELS]


def _best_subfamily(
    candidates: list[int], compatible: np.ndarray, lengths: np.ndarray, mode: EnergyMode
) -> list[int]:
    if mode is EnergyMode.GREEDY:
        chosen: list[int] = []
        for c in candidates:
            if all(compatible[c, other] for other in chosen):
                chosen.append(c)
        return chosen
    best: list[int] = []
    best_length = -1.0
    for size in range(len(candidates), 0, -1):
        for subset in itertools.combinations(candidates, size):
            if all(compatible[a, b] for a, b in itertools.combinations(subset, 2)):
                total = float(lengths[list(subset)].sum())
                if total > best_length:
                    best, best_length = list(subset), total
    return best


def energy_vec(
    f: SampledFunction,
    tc: TileCollection,
    j: int,
    l: int,
    mode: EnergyMode = EnergyMode.GREEDY,
) -> EnergyResult:
    """sup over k and strongly j-disjoint families of vec_l sets with
    4^k |I| <= mass <= 4^(k+1) |I| of 2^k (sum |I|)^{1/2}.

    Greedy selection is a lower bound of the exhaustive value.
    """
    check_components(j, l)
    if not len(tc):
        return EnergyResult(0.0, None, (), mode)
    weights = np.abs(component_coefficients(f, tc, j)) ** 2
    groups = list(tc.component_groups[l].values())
    masses = np.array([weights[list(members)].sum() for members in groups])
    live = [g for g in range(len(groups)) if masses[g] > 0]
    if mode is EnergyMode.EXHAUSTIVE and len(live) > EXHAUSTIVE_MAX_CANDIDATES:
        raise SizeGuardError(
            f"exhaustive energy needs at most {EXHAUSTIVE_MAX_CANDIDATES} candidate sets, got {len(live)}"
        )
    if not live:
        return EnergyResult(0.0, None, (), mode)

    bases = [groups[g][0] for g in live]
    lengths = np.array([tc[b].space.length for b in bases])
    compatible = _compatibility(tc, j, [groups[g] for g in live], bases)
    # greedy visiting order: mass descending, then strip index and space center
    order = sorted(
        range(len(live)),
        key=lambda c: (-masses[live[c]], tc[bases[c]].strip_index, tc[bases[c]].space.center),
    )

    by_level: dict[int, list[int]] = {}
    for c in order:
        for level in admissible_levels(float(masses[live[c]]), float(lengths[c])):
            by_level.setdefault(level, []).append(c)

    best = EnergyResult(0.0, None, (), mode)
    for level in sorted(by_level):
        chosen = _best_subfamily(by_level[level], compatible, lengths, mode)
        value = 2.0**level * math.sqrt(float(lengths[chosen].sum()))
        if value > best.value:
            family = tuple(VectorizedSet(bases[c], (l,), groups[live[c]]) for c in chosen)
            best = EnergyResult(value, level, family, mode)
    return best


def energy_seq(h: Sequence[SampledFunction], tc: TileCollection) -> EnergyResult:
    """(sum_n sum_{s in Q_n} |<h_n, phi_{s_3}>|^2)^{1/2}; the certificate is the whole collection."""
    weights = sequence_weights(h, tc)
    value = math.sqrt(math.fsum(weights.tolist()))
    family = (VectorizedSet(0, (3,), tuple(range(len(tc)))),) if len(tc) else ()
    return EnergyResult(value, None, family)
