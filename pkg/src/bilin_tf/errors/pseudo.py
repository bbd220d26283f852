"""Errors raised by the symbol-class pipeline."""

from bilin_tf.errors.base import BilinTfError


class DivergenceError(BilinTfError):
    """A quadrature integrand is not finite."""

    pass
