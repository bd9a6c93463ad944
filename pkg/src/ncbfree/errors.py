"""Exception types shared across the package."""


class StructureError(ValueError):
    """A value does not have the shape it claims (overlapping blocks, not a bijection, ...)."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation (n = 0, mismatched sizes, ...)."""


class NotInvertibleError(ArithmeticError):
    """A series or scalar has no inverse for the requested operation."""


class PreconditionError(RuntimeError):
    """A documented precondition (e.g. a freeness certificate) was not supplied or did not pass."""
