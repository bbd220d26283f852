"""Errors raised by the sampled-grid layer."""

from bilin_tf.errors.base import BilinTfError


class GridError(BilinTfError):
    """Inputs live on different grids, or a grid is malformed."""

    pass


class BandError(BilinTfError):
    """A requested frequency band is not representable on the grid."""

    pass
