import math

import numpy as np
import pytest

from bilin_tf.errors import DegenerateInputError, ExponentError
from bilin_tf.grid.measurable import MeasurableSet
from bilin_tf.harness.weak_type import (
    check_weak_type_inputs,
    draw_restricted_inputs,
    estimate_weak_type,
    restricted_normalizer,
    weak_type_ratio,
)

EXPONENTS = (3.0, 3.0, 3.0)


@pytest.fixture
def sets(tile_grid):
    return (
        MeasurableSet.interval(tile_grid, -2.0, 4.0),
        MeasurableSet.random(tile_grid, 0.3, 1),
        MeasurableSet.full(tile_grid),
    )


def test_normalizer_by_hand(tile_grid):
    cell = MeasurableSet.single_cell(tile_grid, 10)
    full = MeasurableSet.full(tile_grid)
    expected = tile_grid.spatial_step ** (2 / 3) * tile_grid.period_length ** (1 / 3)
    assert restricted_normalizer((cell, cell, full), EXPONENTS) == pytest.approx(expected)


def test_inputs_are_restricted(cover, sets):
    f1, f2, h = draw_restricted_inputs(cover, sets, 4)
    assert sets[0].admits(f1)
    assert sets[1].admits(f2)
    assert len(h) == len(cover.strips)
    squares = sum(np.abs(np.asarray(hn.samples)) ** 2 for hn in h)
    np.testing.assert_allclose(squares, sets[2].mask.astype(float), atol=1e-12)


def test_circle_phases(cover, sets):
    f1, _, _ = draw_restricted_inputs(cover, sets, 4, phases="circle")
    values = np.abs(np.asarray(f1.samples))[sets[0].mask]
    np.testing.assert_allclose(values, 1.0)


def test_estimate_is_max_ratio(cover, sets):
    estimate = estimate_weak_type(cover, sets, EXPONENTS, trials=3, rng_seed=2)
    assert len(estimate.ratios) == 3
    assert estimate.constant == max(estimate.ratios)
    assert estimate.measures[2] == pytest.approx(cover.packets.grid.period_length)


def test_ratio_scales_with_normalizer(cover, sets):
    f1, f2, h = draw_restricted_inputs(cover, sets, 7)
    ratio = weak_type_ratio(f1, f2, h, cover, sets, EXPONENTS)
    other = weak_type_ratio(f1, f2, h, cover, sets, (3.0, 6.0, 2.0))
    scale = restricted_normalizer(sets, EXPONENTS) / restricted_normalizer(sets, (3.0, 6.0, 2.0))
    assert other == pytest.approx(ratio * scale)


def test_empty_set_rejected(tile_grid, sets):
    empty = MeasurableSet.empty(tile_grid)
    with pytest.raises(DegenerateInputError):
        check_weak_type_inputs((sets[0], empty, sets[2]), EXPONENTS)


@pytest.mark.parametrize("exponents", [(0.5, 3.0, 3.0), (3.0, 3.0)])
def test_bad_exponents(sets, exponents):
    with pytest.raises(ExponentError):
        check_weak_type_inputs(sets, exponents)


def test_infinite_exponent_drops_factor(tile_grid, sets):
    assert restricted_normalizer(sets, (math.inf, math.inf, 1.0)) == pytest.approx(sets[2].measure)
