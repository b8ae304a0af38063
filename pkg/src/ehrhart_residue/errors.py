"""Exception types raised by the engine and the oracles."""


class PreconditionError(ValueError):
    """An input violates a documented precondition (the message names it)."""


class IdentityViolation(ArithmeticError):
    """Two routes that must agree by theorem produced different values."""


class BudgetExceeded(RuntimeError):
    """A brute-force oracle would exceed its iteration budget."""


class SeriesPrecisionError(ArithmeticError):
    """A truncated series operation has no provably correct coefficients left."""


class NonUnitError(ArithmeticError):
    """Attempt to invert a ring element that is not a unit."""
