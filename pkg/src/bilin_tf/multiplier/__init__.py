from bilin_tf.multiplier.bilinear import (
    XDEP_MAX_SAMPLES,
    apply_bilinear,
    bilinear_diagonal,
    bilinear_general,
    bilinear_xdep,
    direct_double_sum,
    exponential_matrix,
)
from bilin_tf.multiplier.linear import linear_multiplier
from bilin_tf.multiplier.pairing import frequency_side_pairing, trilinear_pairing
from bilin_tf.multiplier.symbols import (
    Arity,
    IntervalSupport,
    Smoothness,
    StripSupport,
    SupportAudit,
    SymbolDescriptor,
    audit_support,
    bilinear_hilbert_symbol,
    bump_symbol,
    constant_symbol,
    diagonal_symbol,
    general_symbol,
    hilbert_symbol,
    indicator_symbol,
    lift_diagonal,
    modulated_symbol,
    separable_symbol,
    strip_symbol,
    xdep_symbol,
)

__all__ = [
    "Arity",
    "IntervalSupport",
    "Smoothness",
    "StripSupport",
    "SupportAudit",
    "SymbolDescriptor",
    "XDEP_MAX_SAMPLES",
    "apply_bilinear",
    "audit_support",
    "bilinear_diagonal",
    "bilinear_general",
    "bilinear_hilbert_symbol",
    "bilinear_xdep",
    "bump_symbol",
    "constant_symbol",
    "diagonal_symbol",
    "direct_double_sum",
    "exponential_matrix",
    "frequency_side_pairing",
    "general_symbol",
    "hilbert_symbol",
    "indicator_symbol",
    "lift_diagonal",
    "linear_multiplier",
    "modulated_symbol",
    "separable_symbol",
    "strip_symbol",
    "trilinear_pairing",
    "xdep_symbol",
]
