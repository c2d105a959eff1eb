"""Exception hierarchy for osmroads."""


class OsmRoadsError(Exception):
    """Base class for every error raised by this package."""


class MalformedXml(OsmRoadsError):
    """Structural XML failure; element boundaries can no longer be trusted."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class InvalidAttribute(OsmRoadsError):
    """A single record carries an unusable attribute. Raised internally, counted by the parser."""


class OsmIOError(OsmRoadsError, OSError):
    """The input path could not be opened or read."""


class EmptyClassSet(OsmRoadsError, ValueError):
    pass


class EmptyInput(OsmRoadsError, ValueError):
    pass


class OutOfRange(OsmRoadsError, ValueError):
    pass


class OutOfBand(OsmRoadsError, ValueError):
    """Latitude outside the UTM band (|lat| >= 84)."""


class ZoneTooFar(OsmRoadsError, ValueError):
    """Point lies more than 60 degrees of longitude from the zone's central meridian."""


class ProjectionError(OsmRoadsError, ValueError):
    """Projection of one point of a polyline failed."""

    def __init__(self, way_id, index, cause):
        self.way_id = way_id
        self.index = index
        self.cause = cause
        super().__init__(f"way {way_id}, point {index}: {cause}")


class NonFiniteCoordinate(OsmRoadsError, ValueError):
    def __init__(self, way_id):
        self.way_id = way_id
        super().__init__(f"non-finite coordinate in way {way_id}")


class VertexNotFound(OsmRoadsError, KeyError):
    def __str__(self):
        return f"vertex {self.args[0]} is not in the network"


class NoPath(OsmRoadsError):
    pass


class StyleError(OsmRoadsError, ValueError):
    pass
