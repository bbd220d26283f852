"""Base error class for all bilin-tf operations."""


class BilinTfError(Exception):
    """Base exception for all errors raised by bilin-tf."""

    pass
