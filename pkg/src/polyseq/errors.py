"""Exception hierarchy shared by every module."""


class PolyseqError(Exception):
    """Base class for all errors raised by polyseq."""


class InvalidInputError(PolyseqError, ValueError):
    pass


class ParseError(InvalidInputError):
    pass


class InvalidSwitchError(InvalidInputError):
    pass


class InvalidFaceError(InvalidInputError):
    pass


class NotGraphicalError(PolyseqError, ValueError):
    pass


class UnsupportedOrderError(PolyseqError, ValueError):
    pass


class InsufficientConnectivityError(PolyseqError):
    pass


class ForciblyPolyhedralError(PolyseqError):
    """Raised when a witness is requested for one of the eight sequences."""

    def __init__(self, name: str, message: str | None = None):
        self.name = name
        super().__init__(message or f"forcibly polyhedral ({name})")


class WrongCaseError(PolyseqError):
    """A case handler was called on a graph that belongs to another case."""


class InternalInvariantError(PolyseqError, RuntimeError):
    """A construction that should always succeed did not."""
