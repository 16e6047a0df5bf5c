"""Exception types shared across the package."""

__all__ = [
    "DomainError",
    "NumericError",
    "DegeneracyError",
    "SingularityError",
    "IllConditionedError",
    "ConfigError",
]


class DomainError(ValueError):
    """An argument lies outside the domain an operator is defined on."""


class NumericError(ArithmeticError):
    """A computation produced a non-finite value."""


class DegeneracyError(ValueError):
    """A weight pair (or system built from it) is degenerate."""


class SingularityError(ArithmeticError):
    """Evaluation requested at (or too close to) a kernel singularity."""


class IllConditionedError(ValueError):
    """A linear solve was refused because the system is near-singular."""


class ConfigError(ValueError):
    """A scenario configuration document is malformed or inconsistent."""
