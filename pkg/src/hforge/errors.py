"""Exception types shared across the toolkit."""


class HForgeError(Exception):
    """Base class for all toolkit errors."""


class InvalidParams(HForgeError, ValueError):
    pass


class ZeroPolynomial(HForgeError, ValueError):
    pass


class LengthMismatch(HForgeError, ValueError):
    pass


class MissingEntry(HForgeError, KeyError):
    pass


class IdenticalCurves(HForgeError):
    """Two edges coincide on a nondegenerate stretch of their domains."""

    def __init__(self, first, second):
        super().__init__(f"edges {first!r} and {second!r} coincide")
        self.pair = (first, second)


class EdgeThroughVertex(HForgeError):
    pass


class InvalidDrawing(HForgeError, ValueError):
    pass


class PointOnCurve(HForgeError, ValueError):
    pass


class DegenerateGeometry(HForgeError, ValueError):
    pass


class GeometryConflict(HForgeError, ValueError):
    pass


class ParseError(HForgeError, ValueError):
    pass


class ResourceLimit(HForgeError):
    """Search budget exhausted; ``partial`` holds the best result found so far."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
