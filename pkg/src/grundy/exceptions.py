"""Exception types shared across the package."""


class GrundyError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(GrundyError):
    """Malformed graph input. Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedInput(GrundyError):
    """Operation requires a connected graph."""


class NotBlockGraph(GrundyError):
    """Operation requires a block graph (every block a clique)."""


class NotCutVertex(GrundyError):
    """The designated root vertex is not a cut-vertex."""


class NoCutVertex(GrundyError):
    """The graph has no cut-vertex, so the bound does not apply."""


class NotATree(GrundyError):
    """Operation requires a tree."""


class GirthTooSmall(GrundyError):
    """Girth is below the threshold required for the exact engine."""


class KTooLargeForGirth(GrundyError):
    """Requested color k exceeds (girth+1)/2, outside the decision guarantee."""


class TooLarge(GrundyError):
    """Instance exceeds the brute-force oracle size cap."""


class NotAPermutation(GrundyError):
    """Vertex ordering is not a permutation of 0..n-1."""
