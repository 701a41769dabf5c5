"""Exception types shared across the package."""


class PermgraphError(Exception):
    """Base class for all package errors."""


class InputError(PermgraphError, ValueError):
    """Malformed or out-of-domain input."""


class GraphFormatError(InputError):
    """A graph file or edge list violates the graph format."""


class CapExceeded(InputError):
    """A configured size cap would be exceeded."""


class VerificationError(PermgraphError):
    """An internal post-condition or a proved statement failed to check.

    Seeing this means a bug (or a counterexample to a theorem).
    """
