"""Exception types raised by the library."""


class SigmaNucleiError(Exception):
    """Base class for all library errors."""


class CayleySyntaxError(SigmaNucleiError, ValueError):
    """Malformed Cayley-table or literal text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotLatin(SigmaNucleiError, ValueError):
    """A row or column of a table repeats a symbol."""

    def __init__(self, axis, index):
        self.axis = axis
        self.index = index
        super().__init__(f"{axis} {index} repeats a symbol")


class DegreeMismatch(SigmaNucleiError, ValueError):
    pass


class OrderTooLarge(SigmaNucleiError, ValueError):
    def __init__(self, order, bound):
        self.order = order
        self.bound = bound
        super().__init__(f"order {order} exceeds search bound {bound}")


class NotAutostrophism(SigmaNucleiError, ValueError):
    pass


class InvariantViolation(SigmaNucleiError, AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""
