"""Exception types shared across the package."""


class ContextMismatchError(ValueError):
    """Operands belong to different field contexts."""


class CapacityError(ValueError):
    """Exhaustive operation requested beyond the field-order cap."""


class SingularMatrixError(ArithmeticError):
    """Matrix inverse requested for a singular matrix."""


class NotAPermutationError(ArithmeticError):
    """Compositional inverse requested for a non-permutation polynomial.

    ``criterion_value`` carries the field element whose inequality with 1
    decides the permutation property, when the caller supplied it.
    """

    def __init__(self, message, criterion_value=None):
        super().__init__(message)
        self.criterion_value = criterion_value


class UnsupportedShapeError(ValueError):
    """Binomial parameters match no special-case inverse formula."""
