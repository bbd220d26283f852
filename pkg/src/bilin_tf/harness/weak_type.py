"""Restricted weak-type estimates for the tri-tile model sum."""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from bilin_tf.errors import DegenerateInputError, ExponentError
from bilin_tf.grid.exponents import reciprocal
from bilin_tf.grid.families import FunctionFamily, synthesize_test_function
from bilin_tf.grid.measurable import MeasurableSet
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.timefreq.collection import TileCollection
from bilin_tf.timefreq.model_sum import model_sum

logger = logging.getLogger(__name__)

type SetTriple = tuple[MeasurableSet, MeasurableSet, MeasurableSet]
type Phases = Literal["sign", "circle"]


@dataclass(frozen=True)
class WeakTypeEstimate:
    constant: float
    ratios: tuple[float, ...]
    measures: tuple[float, float, float]
    exponents: tuple[float, float, float]


def check_weak_type_inputs(sets: Sequence[MeasurableSet], exponents: Sequence[float]) -> None:
    if len(sets) != 3 or len(exponents) != 3:
        raise ExponentError(f"need three sets and three exponents, got {len(sets)} and {len(exponents)}")
    for p in exponents:
        if not p >= 1:
            raise ExponentError(f"weak-type exponents must lie in [1, inf], got {tuple(exponents)}")
    for i, e in enumerate(sets, start=1):
        if e.is_empty():
            raise DegenerateInputError(f"E{i} is empty")


def restricted_normalizer(sets: Sequence[MeasurableSet], exponents: Sequence[float]) -> float:
    """prod |E_i|^(1/p_i)."""
    return math.prod(e.measure ** reciprocal(p) for e, p in zip(sets, exponents, strict=True))


def draw_restricted_inputs(
    tc: TileCollection, sets: SetTriple, rng_seed: int, phases: Phases = "sign"
) -> tuple[SampledFunction, SampledFunction, list[SampledFunction]]:
    """f in F(E1), g in F(E2) and h_1..h_K with sum_n |h_n|^2 = 1_{E3}."""
    e1, e2, e3 = sets
    grid = e1.grid
    streams = np.random.SeedSequence(rng_seed).spawn(2 + len(tc.strips))
    seeds = [int(s.generate_state(1, dtype=np.uint64)[0] >> 1) for s in streams]

    def draw(e: MeasurableSet, seed: int) -> SampledFunction:
        return synthesize_test_function(
            grid, FunctionFamily.INDICATOR_SIGNED, {"set": e, "phases": phases}, seed
        )

    scale = 1.0 / math.sqrt(len(tc.strips))
    h = [
        SampledFunction(grid, scale * np.asarray(draw(e3, seed).samples))
        for seed in seeds[2:]
    ]
    return draw(e1, seeds[0]), draw(e2, seeds[1]), h


def weak_type_ratio(
    f1: SampledFunction,
    f2: SampledFunction,
    h: Sequence[SampledFunction],
    tc: TileCollection,
    sets: SetTriple,
    exponents: Sequence[float],
) -> float:
    check_weak_type_inputs(sets, exponents)
    return model_sum(f1, f2, h, tc) / restricted_normalizer(sets, exponents)


def estimate_weak_type(
    tc: TileCollection,
    sets: SetTriple,
    exponents: Sequence[float],
    trials: int,
    rng_seed: int = 0,
    phases: Phases = "sign",
) -> WeakTypeEstimate:
    """max over trials of Lambda_Q(f, g, h) / prod |E_i|^(1/p_i)."""
    check_weak_type_inputs(sets, exponents)
    if trials < 1:
        raise DegenerateInputError(f"need at least one trial, got {trials}")
    if tc.packets is None:
        tc = tc.with_packets(sets[0].grid)
    streams = np.random.SeedSequence(rng_seed).spawn(trials)
    ratios = []
    for stream in streams:
        seed = int(stream.generate_state(1, dtype=np.uint64)[0] >> 1)
        f1, f2, h = draw_restricted_inputs(tc, sets, seed, phases)
        ratios.append(weak_type_ratio(f1, f2, h, tc, sets, exponents))
    constant = max(ratios)
    logger.debug(f"weak-type constant {constant:.6g} over {trials} trials")
    return WeakTypeEstimate(
        constant,
        tuple(ratios),
        (sets[0].measure, sets[1].measure, sets[2].measure),
        (exponents[0], exponents[1], exponents[2]),
    )
