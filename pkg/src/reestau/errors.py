"""Exception types shared across the package."""


class ReestauError(Exception):
    """Base class for all package errors."""


class ContextMismatchError(ReestauError):
    """Operands live in different rings."""


class ParseError(ReestauError):
    """Syntax error in polynomial/ideal source text."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ResourceLimitError(ReestauError):
    """A configured pair-queue or degree cap was exceeded."""


class ZeroDivisorIdealError(ReestauError):
    """Colon by the zero ideal."""


class NonMonomialInputError(ReestauError):
    """An operation restricted to monomial ideals received a non-monomial generator."""


class InhomogeneousGeneratorError(ReestauError):
    """A generator could not be split into homogeneous parts inside the ideal."""


class NonFiniteNuError(ReestauError):
    """nu value is infinite: some generator has no power inside the reference ideal."""


class NonPrincipalCartierError(ReestauError):
    """The Frobenius colon (J^[q] : J) is not principal modulo J^[q] at the requested level."""

    def __init__(self, level, basis_size):
        super().__init__(
            f"Cartier colon at level e={level} is not principal modulo the bracket "
            f"({basis_size} residual basis elements); the presented ring fails the "
            f"index-divides-(p^e - 1) condition at this level"
        )
        self.level = level
        self.basis_size = basis_size


class NoTestElementError(ReestauError):
    """No nonzerodivisor Jacobian minor was found."""


class NoStabilizationError(ReestauError):
    """An ascending chain failed to stabilize within the configured budget."""
