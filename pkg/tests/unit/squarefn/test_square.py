import math

import numpy as np
import pytest

from bilin_tf.errors import AssumptionError, DegenerateInputError, DisjointnessError, ShapeError
from bilin_tf.grid.exponents import ExponentTriple
from bilin_tf.grid.norms import lp_norm
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.intervals.collection import IntervalCollection
from bilin_tf.intervals.families import band_partition
from bilin_tf.intervals.interval import FreqInterval
from bilin_tf.multiplier.symbols import hilbert_symbol
from bilin_tf.squarefn import (
    CutoffMode,
    SquareFunctionSpec,
    bilinear_square_function,
    carleson_spec,
    dyadic_spec,
    lacey_spec,
    linear_square_function,
    littlewood_paley_profile,
    norm_ratio,
    smooth_dyadic_spec,
)


class TestLinearSquareFunction:
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_plancherel_for_sharp_partition(self, small_grid, bandlimited, seed):
        f = bandlimited(seed, band=(-10.0, 10.0))
        spec = SquareFunctionSpec(band_partition(*small_grid.nyquist_band, 7, seed), CutoffMode.SHARP)
        square = linear_square_function(f, spec)
        assert lp_norm(square, 2) == pytest.approx(lp_norm(f, 2), rel=1e-10)

    def test_sharp_needs_disjoint_intervals(self, bandlimited):
        c = IntervalCollection.of([FreqInterval(0.0, 2.0), FreqInterval(0.5, 2.0)])
        with pytest.raises(DisjointnessError):
            linear_square_function(bandlimited(1), SquareFunctionSpec(c, CutoffMode.SHARP))

    def test_smooth_cutoffs_do_not_exceed_plancherel(self, bandlimited):
        f = bandlimited(3)
        square = linear_square_function(f, lacey_spec(-6, 5))
        assert lp_norm(square, 2) <= lp_norm(f, 2) * (1 + 1e-12)

    def test_symbol_family_length_checked(self):
        with pytest.raises(ShapeError):
            SquareFunctionSpec(carleson_spec(0, 2).collection, symbol_family=(hilbert_symbol(),))


class TestLittlewoodPaley:
    def test_profiles_telescope(self):
        xi = np.linspace(0.5, 16.0, 400)
        total = sum(littlewood_paley_profile(2.0**n)(xi) for n in range(-1, 5))
        np.testing.assert_allclose(total.real, 1.0, atol=1e-12)

    def test_support(self):
        psi = littlewood_paley_profile(4.0)
        assert psi(1.9) == 0.0
        assert psi(8.1) == 0.0
        assert psi(-4.0) == 0.0
        assert psi(4.0) == pytest.approx(1.0)


class TestBilinearSquareFunction:
    def test_pointwise_nonnegative(self, bandlimited):
        out = bilinear_square_function(bandlimited(4), bandlimited(5), smooth_dyadic_spec(-2, 3))
        assert np.all(out.samples.imag == 0)
        assert np.all(out.samples.real >= 0)

    def test_single_full_piece_is_pointwise_product(self, small_grid, bandlimited):
        # one sharp difference window covering every lambda = xi - eta on the grid
        f, g = bandlimited(6), bandlimited(7)
        wide = FreqInterval(0.0, 4 * small_grid.nyquist)
        spec = SquareFunctionSpec(IntervalCollection.of([wide]), CutoffMode.SHARP, relaxed=True)
        out = bilinear_square_function(f, g, spec)
        np.testing.assert_allclose(out.samples.real, np.abs(f.samples * g.samples), atol=1e-9)

    def test_assumption_enforced_unless_relaxed(self, bandlimited):
        c = IntervalCollection.of([FreqInterval(0.0, 20.0)])
        with pytest.raises(AssumptionError):
            bilinear_square_function(bandlimited(1), bandlimited(2), SquareFunctionSpec(c))
        relaxed = SquareFunctionSpec(c, relaxed=True)
        bilinear_square_function(bandlimited(1), bandlimited(2), relaxed)

    def test_norm_ratio(self, bandlimited):
        f, g = bandlimited(8), bandlimited(9)
        e = ExponentTriple.from_pq(4.0, 4.0)
        ratio = norm_ratio(f, g, carleson_spec(-4, 3), e)
        assert math.isfinite(ratio) and ratio > 0

    def test_norm_ratio_rejects_zero_input(self, small_grid, bandlimited):
        with pytest.raises(DegenerateInputError):
            norm_ratio(
                SampledFunction.zeros(small_grid), bandlimited(1), dyadic_spec(0, 2), ExponentTriple(4.0, 4.0, 2.0)
            )
