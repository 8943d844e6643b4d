"""Exceptions shared across modules."""


class SizeBoundError(ValueError):
    """An enumeration was refused because its size bound was exceeded."""


class InvalidComplexError(ValueError):
    """A face family is not closed under taking subsets."""


class InconsistencyError(AssertionError):
    """Two independent computations that must agree did not."""
