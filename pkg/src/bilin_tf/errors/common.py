"""Errors shared across modules."""

from bilin_tf.errors.base import BilinTfError


class ParameterError(BilinTfError):
    """A parameter is outside its admissible range."""

    pass


class EmptyCollectionError(BilinTfError):
    """An operation needs a nonempty collection."""

    pass


class DegenerateInputError(BilinTfError):
    """Inputs make a ratio or estimate undefined (zero norm, empty set)."""

    pass


class ShapeError(BilinTfError):
    """Sequence lengths disagree with the collection they index."""

    pass


class SizeGuardError(BilinTfError):
    """An instance exceeds the guard of an expensive evaluation path."""

    pass
