"""Errors raised by tiles, wave packets and the decrement algorithms."""

from bilin_tf.errors.base import BilinTfError


class StateError(BilinTfError):
    """A wave packet needed for a coefficient was never built."""

    pass


class PreconditionError(BilinTfError):
    """The size/energy hypothesis of a decrement step does not hold."""

    pass


class ExponentError(BilinTfError):
    """Exponents are outside the range an estimate accepts."""

    pass
