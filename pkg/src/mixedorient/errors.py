"""Exception types raised across the package."""


class OrientationError(Exception):
    """Base class for all domain errors raised by mixedorient."""


class DisconnectedGraph(OrientationError):
    pass


class NotStronglyOrientable(OrientationError):
    pass


class EmptySet(OrientationError):
    pass


class NoCycle(OrientationError):
    pass


class NoSuchEdge(OrientationError):
    pass


class NotNormalized(OrientationError):
    pass


class PreconditionViolated(OrientationError):
    pass


class InvalidValue(OrientationError, ValueError):
    pass


class EtaOutOfRange(OrientationError, ValueError):
    pass


class SourceMismatch(OrientationError):
    pass


class TooManyFreeEdges(OrientationError):
    def __init__(self, k, limit):
        super().__init__(f"{k} free edges after forcing exceeds the limit of {limit}")
        self.k = k
        self.limit = limit


class GraphSyntaxError(ValueError):
    """Malformed graph file. ``line`` is 1-based."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class IndexOutOfRange(GraphSyntaxError):
    pass


class SelfLoop(GraphSyntaxError):
    pass
