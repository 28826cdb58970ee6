"""Exception types raised across the package."""


class QCountError(Exception):
    """Base class for all qcount errors."""


class NonExactDivision(QCountError, ArithmeticError):
    """Polynomial long division left a remainder or a non-integral coefficient."""


class DivisionByZero(QCountError, ZeroDivisionError):
    """Inverse of zero requested in a prime field."""


class ShapeMismatch(QCountError, ValueError):
    """A star filling does not match the weight of its Ferrers shape."""


class DomainViolation(QCountError, ValueError):
    """A permutation moves a point outside its declared degree."""


class DescentViolation(QCountError, ValueError):
    """A permutation has a descent outside the allowed set."""


class BudgetExceeded(QCountError):
    """An enumeration would produce more objects than the configured cap."""


class NegativeCoefficient(QCountError, ArithmeticError):
    """An alternating sum that must be coefficient-wise nonnegative was not."""
