"""Exception types shared across the package."""


class GeometryError(ValueError):
    """Base class for geometric input problems."""


class DegenerateSegment(GeometryError):
    """A segment whose two endpoints coincide."""


class DegenerateHull(GeometryError):
    """Hull requested for fewer than three points, or an all-collinear set."""


class NotGeneralPosition(GeometryError):
    """Operation requires no three collinear points and the input has some."""


class SegmentOverlap(GeometryError):
    """Two input segments share a collinear subsegment where that is not allowed."""


class DisconnectedVisibility(GeometryError):
    """A visibility graph that should be connected is not."""
