"""Exception hierarchy. Every domain failure is a ``GmfrtError``."""

from __future__ import annotations


class GmfrtError(ValueError):
    """Base class for domain errors (CLI maps these to exit status 1)."""


class SelfLoopError(GmfrtError):
    pass


class DuplicateEdgeError(GmfrtError):
    pass


class IndexOutOfRangeError(GmfrtError):
    pass


class MissingEdgeError(GmfrtError):
    pass


class MalformedHeaderError(GmfrtError):
    pass


class TruncatedBitstreamError(GmfrtError):
    pass


class NotConnectedError(GmfrtError):
    pass


class TooSmallError(GmfrtError):
    pass


class ZeroDegreeError(GmfrtError):
    pass


class NotATreeError(GmfrtError):
    pass


class DegreeTooLowError(GmfrtError):
    pass


class NoEligibleLeavesError(GmfrtError):
    pass


class SameVertexError(GmfrtError):
    pass


class EdgeCountOutOfRangeError(GmfrtError):
    pass


class AlreadyExtremalError(GmfrtError):
    pass


class NoValidMoveError(GmfrtError):
    pass


class TooLargeError(GmfrtError):
    pass


class BadStartError(GmfrtError):
    pass


class WalkTruncatedError(GmfrtError):
    pass


class ConsistencyError(GmfrtError):
    """A closed-form prediction disagreed with direct recomputation."""
