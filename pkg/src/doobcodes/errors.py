class ShapeMismatchError(ValueError):
    """Vectors or codes from different ambient spaces were combined."""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would exceed the configured size cap."""


class ParseError(ValueError):
    """Malformed vector text or code file."""


class TransformError(ArithmeticError):
    """A transformed enumerator is not a valid weight distribution."""
