"""Exception hierarchy shared by every module of the engine."""


class ProcsmError(Exception):
    """Base class for all engine errors."""


class AmbientMismatch(ProcsmError, ValueError):
    pass


class ArithmeticOverflow(ProcsmError, OverflowError):
    """A coefficient left the signed 64-bit range."""


class EmptyFactors(ProcsmError, ValueError):
    pass


class NonPositiveDimension(ProcsmError, ValueError):
    pass


class NotASurface(ProcsmError, ValueError):
    pass


class DuplicateLabel(ProcsmError, ValueError):
    pass


class NotADivisorClass(ProcsmError, ValueError):
    pass


class IndexOutOfRange(ProcsmError, IndexError):
    pass


class MalformedExpression(ProcsmError, ValueError):
    pass


class MissingSmoothDim(ProcsmError, ValueError):
    pass


class InvalidBounds(ProcsmError, ValueError):
    pass


class ParseError(ProcsmError, ValueError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaViolation(ProcsmError, ValueError):
    pass
