"""Exception types shared across the package."""


class LegaugError(Exception):
    """A domain error: bad input, unsupported configuration, or a failed precondition."""


class VerificationError(LegaugError):
    """A structural identity that should hold was found to fail."""
