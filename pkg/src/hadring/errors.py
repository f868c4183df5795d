"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when caller-supplied parameters are outside a function's domain."""


class InvariantViolation(RuntimeError):
    """Raised when an internal consistency check fails.

    These checks guard identities that are supposed to hold for every valid
    input, so seeing this exception means a bug (or a broken install), not a
    bad argument.
    """
