"""Exception taxonomy shared by the library and the command line tool."""


class PreconditionError(ValueError):
    """Inputs violate a documented precondition (bad gcd pattern, p divides
    a coefficient, malformed arguments)."""


class StarvationError(RuntimeError):
    """A truncated computation cannot certify the requested precision.

    Carries enough context to rerun with larger cutoffs.
    """

    def __init__(self, message, *, achieved=None, requested=None):
        super().__init__(message)
        self.achieved = achieved
        self.requested = requested


class InvariantError(RuntimeError):
    """An internal exactness check failed; the result would be wrong."""
