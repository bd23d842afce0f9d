"""Exception types raised by netkit."""


class GraphError(ValueError):
    """Invalid graph construction or mutation."""


class DirectedGraphError(GraphError):
    """A kernel that only accepts undirected graphs received a directed one."""


class NotConnectedError(GraphError):
    """A kernel that requires a connected graph received a disconnected one."""


class ConvergenceError(RuntimeError):
    """An iterative solver stopped at its iteration cap.

    The last observed residual is kept on ``residual``.
    """

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class UndefinedMeasureError(ValueError):
    """A derived quantity is mathematically undefined for the given input
    (zero variance, empty edge set, ...)."""


class NonGraphicalError(GraphError):
    """A degree sequence cannot be realized by a simple graph."""


class ParseError(ValueError):
    """Malformed graph file. ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + loc)
        self.line = line
        self.column = column
