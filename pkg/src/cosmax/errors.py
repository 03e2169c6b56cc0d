"""Exception types shared by all evaluation routes."""


class DomainError(ValueError):
    """A parameter lies outside the mathematical domain of the operation."""


class UnsupportedParameters(ValueError):
    """The point is valid but the requested route cannot serve it."""


class ToleranceUnreachable(RuntimeError):
    """A work cap was hit before the requested accuracy could be certified."""
