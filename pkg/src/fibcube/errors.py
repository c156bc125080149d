"""Exception types raised by fibcube."""


class FibcubeError(Exception):
    pass


class InvalidHypergraph(FibcubeError, ValueError):
    """The hypergraph is not simple or references unknown vertices."""


class VertexRangeError(FibcubeError, IndexError):
    pass


class CapExceeded(FibcubeError):
    """A configured size limit would be exceeded."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class WindowError(FibcubeError, ValueError):
    pass


class HorizonError(FibcubeError, ValueError):
    pass


class NotAnIsomorphism(FibcubeError, ValueError):
    """Raised when a supposed cube isomorphism breaks adjacency.

    ``vertex`` names the hypergraph vertex whose basis pair exposed the
    problem, when known.
    """

    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


class IntegrityError(FibcubeError):
    """An intermediate set turned out dependent; the inputs were corrupt."""
