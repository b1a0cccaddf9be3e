"""Exception hierarchy shared by every module of the package."""


class WeylGenError(Exception):
    """Base class for all errors raised by weylgen."""


class ConfigurationError(WeylGenError, ValueError):
    """An invalid root-system description (unknown family or bad rank)."""


class DimensionError(WeylGenError, ValueError):
    """Mismatched lengths: weights vs rank, polynomials vs variable count."""


class DomainError(WeylGenError, ValueError):
    """An argument outside the mathematical domain of an operation."""


class IntegralityError(WeylGenError, ArithmeticError):
    """A quantity that must be an integer came out non-integral.

    This always signals an internal inconsistency, never bad user input.
    """
