"""Errors raised while loading experiment configuration."""

from bilin_tf.errors.base import BilinTfError


class ConfigError(BilinTfError):
    """An experiment configuration failed validation.

    The message lists every failing field path.
    """

    pass
