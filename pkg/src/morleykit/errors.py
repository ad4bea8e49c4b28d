"""Exception types raised by morleykit."""


class GeometryError(ValueError):
    """Base class for every geometric failure."""


class CoincidentPoints(GeometryError):
    pass


class CollinearPoints(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class DegenerateAngle(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class ProportionalTriples(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class NonEquilateralFrame(GeometryError):
    pass


class InvalidParameters(GeometryError):
    pass


class WrongSide(InvalidParameters):
    """Flank intersections exist but fall on the wrong side of XYZ."""


class InconsistentConfiguration(GeometryError):
    pass


class CircumcenterOutside(GeometryError):
    pass


class InvalidRequest(GeometryError):
    pass


class NotConverged(GeometryError):
    """Carries the best iterate so callers can inspect partial results."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class SingularJacobian(RuntimeWarning):
    pass
