from bilin_tf.squarefn.spec import (
    CutoffMode,
    SquareFunctionSpec,
    carleson_spec,
    dyadic_spec,
    lacey_spec,
    littlewood_paley_profile,
    smooth_dyadic_spec,
)
from bilin_tf.squarefn.square import (
    bilinear_square_function,
    linear_square_function,
    norm_ratio,
)

__all__ = [
    "CutoffMode",
    "SquareFunctionSpec",
    "bilinear_square_function",
    "carleson_spec",
    "dyadic_spec",
    "lacey_spec",
    "linear_square_function",
    "littlewood_paley_profile",
    "norm_ratio",
    "smooth_dyadic_spec",
]
