"""Shared exception types."""


class ValidationError(ValueError):
    """An input value, argument, or document was rejected by validation.

    Raised for out-of-range scores, malformed probability vectors, bad game
    shapes, and schema violations in loaded documents. The message always
    names the offending field or key.
    """
