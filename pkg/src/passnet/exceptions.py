"""Exception hierarchy shared by every passnet module."""


class PassnetError(Exception):
    """Base class for all errors raised by passnet."""


class FixtureParseError(PassnetError):
    """The fixture document is malformed (bad JSON, missing or mistyped field)."""

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class ValidationError(PassnetError):
    """The fixture parsed but violates a data invariant."""

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class DomainError(PassnetError, ValueError):
    """An argument lies outside the domain where a measure is defined."""


class DegenerateNetworkError(DomainError):
    """The network carries no passes at all, so a normalisation is undefined."""


class ConvergenceError(PassnetError):
    """Fixed-point iteration did not converge."""

    def __init__(self, iterations: int, residual: float):
        self.iterations = iterations
        self.residual = residual
        super().__init__(
            f"no convergence after {iterations} iterations (last residual {residual:.3e})"
        )


class RenderError(PassnetError):
    """The network cannot be drawn."""
