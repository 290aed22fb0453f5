"""Exception types shared across the package."""


class EsomborError(Exception):
    """Base class for all package errors."""


class NotATreeError(EsomborError):
    """Edge set is not a tree (wrong edge count, cycle, or disconnected)."""


class DegreeBoundError(EsomborError):
    """Some vertex exceeds the maximum allowed degree."""


class BadLabelError(EsomborError):
    """Vertex label outside 0..n-1."""


class DuplicateEdgeError(EsomborError):
    """The same unordered edge appears twice."""


class ParseError(EsomborError):
    """Malformed serialized tree."""


class UnsupportedFormatError(EsomborError):
    """Unknown serialization format name."""


class OrderTooSmallError(EsomborError):
    """Operation requires a larger tree order (typically n >= 5)."""


class OrderTooLargeError(EsomborError):
    """Order exceeds the configured enumeration/oracle cap."""


class ResourceLimitError(EsomborError):
    """Configured cap on the number of isomorphism classes was exceeded."""
