"""Exception types shared across the package."""


class FieldMismatch(ValueError):
    """Operands live over different field orders."""


class ModulusMismatch(ValueError):
    """Quadratic-extension elements built over different minimal polynomials."""


class ParseError(ValueError):
    """Polynomial text could not be parsed; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


class InvalidInput(ValueError):
    """A documented precondition was violated; the message names it."""
