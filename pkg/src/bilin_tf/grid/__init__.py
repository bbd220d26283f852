from bilin_tf.grid.exponents import SWEEP_INFINITY_PROXY, ExponentTriple
from bilin_tf.grid.families import FunctionFamily, periodized_gaussian, synthesize_test_function
from bilin_tf.grid.measurable import MeasurableSet
from bilin_tf.grid.modulation import (
    hilbert_transform,
    interval_projection_via_hilbert,
    modulate,
)
from bilin_tf.grid.norms import lp_norm, lp_norm_values, spectral_l2_norm
from bilin_tf.grid.sampled import SampledFunction, forward_transform, inverse_transform
from bilin_tf.grid.spec import DEFAULT_PERIOD_LENGTH, DEFAULT_SAMPLE_COUNT, GridSpec

__all__ = [
    "DEFAULT_PERIOD_LENGTH",
    "DEFAULT_SAMPLE_COUNT",
    "ExponentTriple",
    "FunctionFamily",
    "GridSpec",
    "MeasurableSet",
    "SWEEP_INFINITY_PROXY",
    "SampledFunction",
    "forward_transform",
    "hilbert_transform",
    "interval_projection_via_hilbert",
    "inverse_transform",
    "lp_norm",
    "lp_norm_values",
    "modulate",
    "periodized_gaussian",
    "spectral_l2_norm",
    "synthesize_test_function",
]
