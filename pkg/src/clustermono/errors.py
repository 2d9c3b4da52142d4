"""Exception types shared across the package."""


class StructuralError(ValueError):
    """Operands have incompatible shapes (rank or degree mismatch)."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(RuntimeError):
    """A configured size or node limit would be exceeded."""


class DivisionError(ArithmeticError):
    """Exact division left a nonzero remainder.

    Inside a mutation chain this means a bug: the quotient is always a
    Laurent polynomial for cluster variables.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class PreconditionError(ValueError):
    """An input failed a hypothesis of a check; ``report`` holds the evidence."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
