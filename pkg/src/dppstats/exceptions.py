"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class QuadratureFailure(RuntimeError):
    """A quadrature routine could not certify the requested tolerance."""


class TruncationFailure(RuntimeError):
    """A series truncation could not reach the requested tail bound."""
