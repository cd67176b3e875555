"""Exception types shared across the package."""


class NakctError(Exception):
    """Base class for all errors raised by this package."""


class InvalidKupisch(NakctError):
    """A Kupisch series violates an admissibility condition.

    Carries the failing index (1-based, or None for global conditions)
    so callers can report precisely which entry is bad.
    """

    def __init__(self, message, index=None):
        super().__init__(message if index is None else f"{message} (at index {index})")
        self.index = index


class InvalidParameter(NakctError):
    pass


class KindMismatch(NakctError):
    pass


class NotACutPoint(NakctError):
    pass


class NoArrow(NakctError):
    pass


class InvalidSubcategory(NakctError):
    pass


class GroundSetTooLarge(NakctError):
    pass


class FiniteGlobalDimension(NakctError):
    pass


class NotInClassifiedCase(NakctError):
    pass


class InternalError(NakctError):
    """An internal consistency assertion failed (never expected on valid input)."""
