class UmbralError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(UmbralError, ValueError):
    pass


class IndexOutOfRange(UmbralError, ValueError):
    pass


class PreconditionError(UmbralError):
    """An operation's input precondition does not hold.

    ``witness`` carries the offending object (typically the nonzero
    polynomial that proves the violation).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(UmbralError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SchemaError(UmbralError, ValueError):
    def __init__(self, message, path="/"):
        super().__init__(f"{path}: {message}")
        self.path = path
