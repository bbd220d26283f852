from bilin_tf.errors.base import BilinTfError
from bilin_tf.errors.common import (
    DegenerateInputError,
    EmptyCollectionError,
    ParameterError,
    ShapeError,
    SizeGuardError,
)
from bilin_tf.errors.config import ConfigError
from bilin_tf.errors.grid import BandError, GridError
from bilin_tf.errors.pseudo import DivergenceError
from bilin_tf.errors.squarefn import AssumptionError, DisjointnessError
from bilin_tf.errors.timefreq import ExponentError, PreconditionError, StateError

__all__ = [
    "AssumptionError",
    "BandError",
    "BilinTfError",
    "ConfigError",
    "DegenerateInputError",
    "DisjointnessError",
    "DivergenceError",
    "EmptyCollectionError",
    "ExponentError",
    "GridError",
    "ParameterError",
    "PreconditionError",
    "ShapeError",
    "SizeGuardError",
    "StateError",
]
