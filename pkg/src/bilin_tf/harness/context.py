"""Per-trial state handed to experiment definitions."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from bilin_tf.config.experiment import ExperimentConfig, TileParams
from bilin_tf.grid.families import FunctionFamily, synthesize_test_function
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.grid.spec import GridSpec
from bilin_tf.intervals.collection import IntervalCollection
from bilin_tf.intervals.families import random_well_distributed
from bilin_tf.timefreq.collection import TileCollection
from bilin_tf.timefreq.cover import build_tritile_cover

logger = logging.getLogger(__name__)

SEED_BOUND = 2**63


@dataclass
class TrialContext:
    config: ExperimentConfig
    index: int
    rng: np.random.Generator

    @cached_property
    def grid(self) -> GridSpec:
        return self.config.grid.to_grid()

    def draw_seed(self) -> int:
        return int(self.rng.integers(SEED_BOUND))

    def draw_function(
        self,
        family: FunctionFamily | None = None,
        params: dict[str, Any] | None = None,
    ) -> SampledFunction:
        """A test function from the configured family unless one is given."""
        functions = self.config.functions
        if family is None:
            family = functions.family
            params = functions.params if params is None else params
        return synthesize_test_function(self.grid, family, params, self.draw_seed())

    def draw_sequence(self, count: int) -> list[SampledFunction]:
        return [self.draw_function() for _ in range(count)]


def build_strips(tiles: TileParams, rng_seed: int) -> IntervalCollection:
    return random_well_distributed(
        tiles.strip_count,
        rng_seed,
        length_band=(tiles.strip_length, tiles.strip_length),
        separation=tiles.strip_separation,
    )


def build_tile_collection(ctx: TrialContext) -> TileCollection:
    """Tri-tile cover of the configured strips, thinned to ``max_tritiles``
    by a seeded draw, with its wave packets built."""
    tiles = ctx.config.tiles
    strips = build_strips(tiles, ctx.draw_seed())
    tc = build_tritile_cover(
        strips, tiles.space_extent, tiles.space_scale, (tiles.band_low, tiles.band_high)
    )
    if len(tc) > tiles.max_tritiles:
        keep = ctx.rng.choice(len(tc), size=tiles.max_tritiles, replace=False)
        tc = tc.subset(keep.tolist())
    logger.debug(f"trial {ctx.index}: {len(tc)} tri-tiles over {len(strips)} strips")
    return tc.with_packets(ctx.grid)


def draw_subcollection(ctx: TrialContext, tc: TileCollection, size: int) -> TileCollection:
    if len(tc) <= size:
        return tc
    return tc.subset(ctx.rng.choice(len(tc), size=size, replace=False).tolist())
