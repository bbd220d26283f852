from bilin_tf.pseudo.adjoint import (
    adjoint,
    adjoint_angle,
    adjoint_level_angle,
    adjoint_symbol,
    is_degenerate,
)
from bilin_tf.pseudo.buckets import BucketRecord, BucketReport, evaluate_via_buckets, plan_buckets
from bilin_tf.pseudo.decompose import TranslateDecomposition, partition_weight, unit_decompose
from bilin_tf.pseudo.directional import (
    DirectionalNorm,
    DirectionalSymbol,
    directional_norm,
    directional_norm_report,
)
from bilin_tf.pseudo.offdiag import OffDiagonalReport, offdiag_decay
from bilin_tf.pseudo.presets import (
    SymbolPreset,
    build_symbol_preset,
    compact_bump_ridge,
    gaussian_ridge,
    hilbert_ridge,
    random_translate_series,
)
from bilin_tf.pseudo.translated import (
    TranslatedFamilyReport,
    fit_decay,
    translate_profile,
    translated_family_bound,
)

__all__ = [
    "BucketRecord",
    "BucketReport",
    "DirectionalNorm",
    "DirectionalSymbol",
    "OffDiagonalReport",
    "SymbolPreset",
    "TranslateDecomposition",
    "TranslatedFamilyReport",
    "adjoint",
    "adjoint_angle",
    "adjoint_level_angle",
    "adjoint_symbol",
    "build_symbol_preset",
    "compact_bump_ridge",
    "directional_norm",
    "directional_norm_report",
    "evaluate_via_buckets",
    "fit_decay",
    "gaussian_ridge",
    "hilbert_ridge",
    "is_degenerate",
    "offdiag_decay",
    "partition_weight",
    "plan_buckets",
    "random_translate_series",
    "translate_profile",
    "translated_family_bound",
    "unit_decompose",
]
