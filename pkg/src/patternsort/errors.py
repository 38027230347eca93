"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Raised when an argument fails a precondition (bad permutation, bad RGF, ...)."""


class MalformedInputError(ValueError):
    """Raised when structured input (a path, a trace, a text encoding) cannot be decoded."""


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration would exceed the configured size cap."""


class InsertRejected(Exception):
    """An insertion into the generating tree was refused.

    ``reason`` is one of ``"inactive"``, ``"illegal-op"``, ``"empty-cell"``.
    A rejection is an expected outcome, not a bug: the generating tree uses
    it to tell legal growth steps from illegal ones.
    """

    def __init__(self, reason: str, message: str = ""):
        self.reason = reason
        super().__init__(message or reason)
