"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UnsupportedDimensionError(DomainError):
    """The requested dimension has no quadrature or evaluation support."""


class InvalidGaugeError(DomainError):
    """A gauge specification violates convexity, positivity, or g(0)=0."""


class EvaluationError(RuntimeError):
    """A field evaluation produced a non-finite value.

    The offending evaluation point is carried in ``node``.
    """

    def __init__(self, message: str, node=None):
        super().__init__(message)
        self.node = node


class SchemaError(ValueError):
    """A scenario config failed validation; ``path`` locates the bad field."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(message)
        self.path = path
