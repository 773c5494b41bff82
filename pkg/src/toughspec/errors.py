"""Exception hierarchy shared by every toughspec module."""


class ToughspecError(Exception):
    """Base class for all errors raised by the package."""


class ParameterError(ToughspecError, ValueError):
    """A constructor or closed form was called outside its parameter domain."""


class DomainError(ToughspecError, ValueError):
    """A numeric function was evaluated outside its domain (negative radicand etc.)."""


class EmptyGraphError(ToughspecError, ValueError):
    pass


class NumericalError(ToughspecError, ArithmeticError):
    """An iterative numeric routine failed to converge or find a root."""


class CapacityError(ToughspecError):
    """An exponential search was asked to run beyond its configured size cap."""


class PartitionError(ToughspecError, ValueError):
    pass


class Graph6Error(ToughspecError, ValueError):
    """Malformed graph6 input.

    ``offset`` is the byte offset inside the line, ``line`` the 1-based line
    number when the text came from a stream.
    """

    def __init__(self, message, offset=None, line=None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
