"""Exception types shared by the library and the CLI."""


class PreconditionError(ValueError):
    """An argument violates the documented precondition of an operation."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; this indicates a bug."""
