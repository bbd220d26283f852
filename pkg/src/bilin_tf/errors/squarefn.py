"""Errors raised while building or evaluating square functions."""

from bilin_tf.errors.base import BilinTfError


class DisjointnessError(BilinTfError):
    """Sharp cutoffs were requested on overlapping intervals."""

    pass


class AssumptionError(BilinTfError):
    """A collection violates the admissible length band or tile scale."""

    pass
