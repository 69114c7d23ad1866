"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class HessdeformError(Exception):
    """Base class."""


class RejectedInput(HessdeformError, ValueError):
    """Input outside an operation's precondition."""


class UnsupportedInput(RejectedInput):
    """Input that is mathematically fine but outside the exact-rational scope."""


class InternalContradiction(HessdeformError, AssertionError):
    """A consistency check failed; almost certainly a convention bug."""


class Unresolved(HessdeformError):
    """The cohomology resolver could only produce bounds."""


class ResourceLimit(HessdeformError):
    """A combinatorial expansion would exceed the configured cap."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate
