"""Exception hierarchy shared by all modules."""


class PlanarDiamError(Exception):
    """Base class for every error raised by this package."""


class GraphError(PlanarDiamError, ValueError):
    pass


class NonPlanarEmbedding(GraphError):
    """The rotation system does not describe a genus-0 embedding."""


class MalformedRotation(GraphError):
    pass


class NegativeLength(GraphError):
    pass


class NotConnected(GraphError):
    pass


class NoMarkedVertices(GraphError):
    pass


class RootUnmarked(GraphError):
    pass


class NoBalancedEdge(PlanarDiamError, RuntimeError):
    """No non-tree edge yields a 2/3-balanced cycle; only possible on a bad triangulation."""


class Unreached(PlanarDiamError, LookupError):
    pass


class EmptyPath(PlanarDiamError, ValueError):
    pass


class OutsidePrefix(PlanarDiamError, LookupError):
    pass


class NoPortals(PlanarDiamError, ValueError):
    pass


class ZeroScale(PlanarDiamError, ValueError):
    pass


class EmptySide(PlanarDiamError, ValueError):
    pass


class EmptySet(PlanarDiamError, ValueError):
    pass


class BadEpsilon(PlanarDiamError, ValueError):
    pass


class EmbeddingSpliceFailure(PlanarDiamError, RuntimeError):
    pass


class ParseError(PlanarDiamError, ValueError):
    """A graph file could not be parsed. Carries the offending field."""

    def __init__(self, message, field=None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field


class ValidationError(ParseError):
    """A graph file parsed but describes an invalid embedding."""
