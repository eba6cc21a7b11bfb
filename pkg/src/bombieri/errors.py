"""Exception types shared by the numerical modules."""


class BombieriError(Exception):
    pass


class DomainError(BombieriError, ValueError):
    """Argument outside the region where an operation is defined."""


class ConfigError(BombieriError, ValueError):
    pass


class RangeError(BombieriError, ValueError):
    """Index pair (m, n) violates 2 <= n < m."""


class NormalizationError(BombieriError, ValueError):
    """Polynomial is not of the form z + a_2 z^2 + ..."""


class DegenerateError(BombieriError, ArithmeticError):
    """Roots could not be separated from the unit circle."""


class PoleError(BombieriError, ArithmeticError):
    """z f'(z)/f(z) has a pole on the closed unit disk."""


class ConvergenceError(BombieriError, ArithmeticError):
    pass
