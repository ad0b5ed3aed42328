"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller supplied arguments outside an operation's domain."""


class InvariantError(RuntimeError):
    """An internal guarantee failed; indicates a bug, not bad input."""
