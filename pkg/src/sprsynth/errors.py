"""Exception types shared by all modules.

Exit-code mapping in the CLI: invalid input and violated preconditions exit
with 2, internal contradictions with 1.
"""


class SprSynthError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SprSynthError):
    """Malformed or out-of-domain input (wrong degree, zero polynomial, ...)."""


class PreconditionError(SprSynthError):
    """A documented precondition of an operation does not hold.

    Carries optional machine-readable detail (e.g. which vertex of an
    interval family fails the stability check).
    """

    def __init__(self, message, **detail):
        super().__init__(message)
        self.detail = dict(detail)


class InternalContradictionError(SprSynthError):
    """A search that is guaranteed to succeed by the underlying theory failed.

    Surfacing this loudly is deliberate: it means a bug, not a bad input.
    """
