"""Exception hierarchy shared by every module."""


class CliqueTreeError(Exception):
    """Base class for errors raised by this package."""


class InvalidArgumentError(CliqueTreeError, ValueError):
    """An argument violates an operation's precondition."""


class UnsupportedInputError(CliqueTreeError):
    """The graph is outside the class an operation is defined for.

    Raised for non-chordal graphs by every structural operation, and for
    disconnected graphs where the theory needs connectivity.
    """


class NotChordalError(UnsupportedInputError):
    pass


class DisconnectedGraphError(UnsupportedInputError):
    pass


class ResourceLimitError(CliqueTreeError):
    """An exhaustive enumeration would exceed its guard.

    ``count`` carries the exact clique-tree count when it is known, so
    callers can still report it.
    """

    def __init__(self, message: str, count: int | None = None):
        super().__init__(message)
        self.count = count


class TheoremViolation(CliqueTreeError, AssertionError):
    """Two routes that must agree by a structural theorem disagreed."""
