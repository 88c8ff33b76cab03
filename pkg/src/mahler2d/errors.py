"""Exception hierarchy for geometric validation and verification failures."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class TooFewVertices(GeometryError):
    pass


class NotSymmetric(GeometryError):
    pass


class NotConvex(GeometryError):
    pass


class CollinearVertices(GeometryError):
    pass


class SingularMap(GeometryError):
    pass


class NearParallelConstraints(GeometryError):
    pass


class CheckFailed(GeometryError):
    """A verified invariant or inequality did not hold."""


class BoundViolated(CheckFailed):
    pass


class EmptyInterval(GeometryError):
    pass


class DegenerateChord(GeometryError):
    pass


class OutOfInterval(GeometryError):
    pass


class PreconditionViolated(GeometryError):
    pass


class MonotonicityViolated(GeometryError):
    pass


class NoProgress(GeometryError):
    pass


class DomainError(GeometryError):
    pass


class DegenerateDraw(GeometryError):
    pass
