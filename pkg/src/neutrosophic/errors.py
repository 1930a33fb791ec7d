"""Exception hierarchy shared by every module in the package."""


class NeutrosophicError(Exception):
    """Base class for all errors raised by this package."""


class NegativeOperand(NeutrosophicError, ValueError):
    """A multiplication operand has a negative standard part."""


class MalformedInterval(NeutrosophicError, ValueError):
    """An interval literal whose lower bound exceeds its upper bound."""


class EmptyOperand(NeutrosophicError, ValueError):
    """A set operation received an empty set."""


class EmptySet(EmptyOperand):
    """inf/sup requested of an empty set."""


class DivisionByZero(NeutrosophicError, ZeroDivisionError):
    pass


class OutOfRange(NeutrosophicError, ValueError):
    """A degree lies outside the range an operation accepts."""


class UnboundAtom(NeutrosophicError, KeyError):
    def __init__(self, name, line=None, column=None):
        super().__init__(name)
        self.name = name
        self.line = line
        self.column = column

    def __str__(self):
        where = f" at line {self.line}, column {self.column}" if self.line else ""
        return f"unbound atom {self.name!r}{where}"


class TooManyAtoms(NeutrosophicError, ValueError):
    pass


class ParseError(NeutrosophicError, ValueError):
    """Syntax error in a bound, set literal or program, with source position."""

    def __init__(self, message, line, column, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        super().__init__(str(self))

    def __str__(self):
        text = f"{self.line}:{self.column}: {self.message}"
        if self.expected:
            text += f" (expected {', '.join(self.expected)})"
        return text


class DuplicateAssignment(NeutrosophicError, ValueError):
    def __init__(self, name, line, column):
        self.name = name
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {name!r} is already assigned")


class EvaluationError(NeutrosophicError):
    """Wraps a failure raised while running statement number ``index``."""

    def __init__(self, index, cause):
        self.index = index
        self.cause = cause
        super().__init__(f"statement {index}: {cause}")


class UnsupportedOperand(NeutrosophicError, ValueError):
    """An operand outside what an evaluation mode can handle."""
