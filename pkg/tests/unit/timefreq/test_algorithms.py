import importlib
import logging
import math

import pytest

from bilin_tf.errors import ExponentError, PreconditionError
from bilin_tf.timefreq import (
    energy_decrement,
    energy_decrement_seq,
    energy_seq,
    energy_vec,
    lambda_bound,
    model_sum,
    model_terms,
    size_seq,
    size_vec,
    sparse_split,
    tritile_estimate,
)
from bilin_tf.timefreq.lambda_bound import interpolation_weights

# the package re-exports the function under the module name
lambda_bound_module = importlib.import_module("bilin_tf.timefreq.lambda_bound")


def _level(energy: float, size: float) -> int:
    return math.floor(math.log2(energy / size))


class TestEnergyDecrement:
    @pytest.mark.parametrize("j,l", [pytest.param(1, 2, id="vec_12"), pytest.param(2, 1, id="vec_21")])
    def test_audit_passes_on_sparse_parts(self, cover, inputs, j, l):
        f = inputs[j - 1]
        for part in sparse_split(cover):
            energy = energy_vec(f, part, j, l).value
            size = size_vec(f, part, j, l).value
            if size == 0:
                continue
            result = energy_decrement(f, part, j, l, _level(energy, size), energy)
            assert result.audit.passed, f"audit failed: {result.audit}"
            assert result.audit.size_after <= result.audit.size_limit * (1 + 1e-9)

    def test_remainder_and_trees_partition(self, cover, inputs):
        f = inputs[0]
        energy = energy_vec(f, cover, 1, 2).value
        d = _level(energy, size_vec(f, cover, 1, 2).value)
        result = energy_decrement(f, cover, 1, 2, d, energy)
        removed = [i for tree in result.trees for i in tree.members]
        assert sorted(removed + list(result.remainder_indices)) == list(range(len(cover)))
        assert len(result.seeds) == len(result.trees)

    def test_precondition(self, cover, inputs):
        f = inputs[0]
        energy = energy_vec(f, cover, 1, 2).value
        size = size_vec(f, cover, 1, 2).value
        d = math.ceil(math.log2(energy / size)) + 1
        with pytest.raises(PreconditionError):
            energy_decrement(f, cover, 1, 2, d, energy)

    def test_sequence_decrement(self, cover, inputs):
        h = inputs[2]
        energy = energy_seq(h, cover).value
        size = size_seq(h, cover, 1, 2).value
        result = energy_decrement_seq(h, cover, 1, 2, _level(energy, size))
        assert result.audit.strongly_disjoint is None
        assert result.audit.passed
        assert result.audit.disjoint_union

    def test_negative_level_allowed(self, cover, inputs):
        f = inputs[0]
        size = size_vec(f, cover, 1, 2).value
        # E = S/2 forces d = -1
        result = energy_decrement(f, cover, 1, 2, -1, size / 2)
        assert result.audit.size_limit == pytest.approx(size / 2)


class TestModelSum:
    def test_linear_in_each_input(self, cover, inputs):
        f1, f2, h = inputs
        base = model_sum(f1, f2, h, cover)
        assert base > 0
        assert model_sum(f1.scaled(2.0), f2, h, cover) == pytest.approx(2.0 * base, rel=1e-12)
        assert model_sum(f1, f2.scaled(-1j), h, cover) == pytest.approx(base, rel=1e-12)

    def test_order_independent(self, cover, inputs):
        f1, f2, h = inputs
        reversed_tc = type(cover)(tuple(reversed(cover.tritiles)), cover.strips, packets=cover.packets)
        assert model_sum(f1, f2, h, reversed_tc) == model_sum(f1, f2, h, cover)

    @pytest.mark.parametrize("seed", [0, 5, 17])
    def test_single_tree_estimate(self, cover, inputs, seed):
        f1, f2, h = inputs
        estimate = tritile_estimate(f1, f2, h, cover, seed)
        assert estimate.ratio <= 1 + 1e-9, f"tree estimate ratio {estimate.ratio}"
        assert seed in estimate.tree.members


class TestLambdaBound:
    def test_bound_dominates_model_sum(self, cover, inputs):
        f1, f2, h = inputs
        result = lambda_bound(f1, f2, h, cover, (3.0, 3.0, 3.0))
        report = result.report
        assert report is not None
        assert report.model_sum <= result.bound * (1 + 1e-12)
        assert report.holder_exact
        assert report.c_tree >= 1.0

    def test_partition_covers_collection(self, cover, inputs):
        f1, f2, h = inputs
        result = lambda_bound(f1, f2, h, cover)
        members = sorted(i for level in result.partition.values() for i in level)
        assert members == list(range(len(cover)))

    def test_level_model_sums_add_up(self, cover, inputs):
        f1, f2, h = inputs
        result = lambda_bound(f1, f2, h, cover)
        report = result.report
        total = math.fsum(record.model_sum for record in report.levels) + report.leftover
        assert total == pytest.approx(math.fsum(model_terms(f1, f2, h, cover).tolist()), rel=1e-12)

    def test_each_level_within_its_bound(self, cover, inputs):
        f1, f2, h = inputs
        report = lambda_bound(f1, f2, h, cover).report
        assert report.levels
        for record in report.levels:
            assert record.model_sum <= record.bound * (1 + 1e-9), record
        assert report.level_bounds
        assert report.audits_passed

    def test_level_failure_is_reported(self, cover, inputs, monkeypatch, caplog):
        f1, f2, h = inputs
        # a slack of -1 turns every level bound into zero
        monkeypatch.setattr(lambda_bound_module, "LEVEL_SLACK", -1.0)
        with caplog.at_level(logging.WARNING, logger=lambda_bound_module.__name__):
            report = lambda_bound(f1, f2, h, cover).report
        assert not report.level_bounds
        assert not report.audits_passed
        assert "exceeds level bound" in caplog.text

    @pytest.mark.parametrize("index", [0, 5, 17])
    def test_single_tritile_reduces_to_tree_estimate(self, cover, inputs, index):
        f1, f2, h = inputs
        single = cover.subset([index])
        result = lambda_bound(f1, f2, h, single)
        estimate = tritile_estimate(f1, f2, h, single, 0)
        assert estimate.ratio == pytest.approx(1.0, rel=1e-10)
        assert result.bound == pytest.approx(estimate.rhs, rel=1e-10)
        assert result.bound == pytest.approx(model_sum(f1, f2, h, single), rel=1e-10)
        assert list(result.partition.values()) == [(0,)]
        assert result.report.level_bounds

    def test_empty_collection(self, cover, inputs):
        f1, f2, h = inputs
        assert lambda_bound(f1, f2, h, cover.subset([])).bound == 0.0


class TestInterpolationWeights:
    def test_holder_dual(self):
        theta, exact = interpolation_weights((3.0, 3.0, 3.0))
        assert exact
        assert theta == pytest.approx((1 / 3, 1 / 3, 1 / 3))

    def test_rescaled(self):
        theta, exact = interpolation_weights((4.0, 4.0, 4.0))
        assert not exact
        assert sum(theta) == pytest.approx(1.0)

    @pytest.mark.parametrize("exponents", [(2.0, 4.0, 4.0), (3.0, 3.0), (3.0, math.inf, 3.0)])
    def test_range(self, exponents):
        with pytest.raises(ExponentError):
            interpolation_weights(exponents)
