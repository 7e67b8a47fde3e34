"""Exception types shared across the package."""


class Hg2Error(Exception):
    """Base class for every error this package raises."""


# -- construction ---------------------------------------------------------

class DuplicateNodeError(Hg2Error):
    pass


class DuplicateEdgeError(Hg2Error):
    pass


class UnknownVertexError(Hg2Error):
    """A hyperedge names a head/tail member outside the node set."""


class EmptyHeadOrTailError(Hg2Error):
    pass


class HeadTailOverlapError(Hg2Error):
    pass


class NegativeWeightError(Hg2Error):
    pass


class UnknownEndpointError(Hg2Error):
    """A graph edge names an endpoint outside the node set."""


class DanglingConnectorError(Hg2Error):
    """A connector endpoint resolves in neither layer."""


class DuplicateSourceConnectorError(Hg2Error):
    """A hypernode or hyperedge carries more than one connector."""


# -- queries --------------------------------------------------------------

class UnknownIdError(Hg2Error):
    pass


class DegenerateQueryError(Hg2Error):
    """Raised for source == target route queries."""


class NotAHyperpathError(Hg2Error):
    pass


class InvalidRouteError(Hg2Error):
    pass


class InvalidTraceError(Hg2Error):
    """The node walk is not realizable in the lower-layer graph."""


class TraceMismatchError(Hg2Error):
    """The walk does not trace the route's anchor sequence."""


# -- serialization --------------------------------------------------------

class ParseError(Hg2Error):
    """Input text is not well-formed JSON."""


class LocatedError(Hg2Error):
    """An error tied to a location inside a document."""

    def __init__(self, message: str, path: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class SchemaError(LocatedError):
    """Missing/extra fields or wrong field types in a document."""


class SemanticError(LocatedError):
    """Well-shaped document that violates a structural rule."""

    def __init__(self, message: str, path: str, cause: Hg2Error | None = None):
        super().__init__(message, path)
        self.cause = cause
