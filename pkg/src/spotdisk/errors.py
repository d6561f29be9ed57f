"""Shared exception types."""


class RankError(ValueError):
    """A letter index lies outside the ambient rank, or two ranks disagree."""


class ParseError(ValueError):
    """Word text matches neither the token grammar nor the compact grammar."""


class CapExceeded(RuntimeError):
    """A configured resource cap (word length, search bound) was exceeded."""
