"""Exception types shared across qzeta."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class MixedOrderError(DomainError):
    """Two cyclotomic elements from different fields were combined."""


class NotRational(ArithmeticError):
    """A cyclotomic element expected to be rational has irrational part.

    ``coeffs`` holds the offending coefficient vector as strings.
    """

    def __init__(self, coeffs, message=None):
        self.coeffs = list(coeffs)
        super().__init__(message or f"element is not rational: {self.coeffs}")
