"""Exception hierarchy.

Input problems derive from ``TriangulationError`` (a ``ValueError``); broken
internal invariants derive from ``InvariantViolation`` so callers can tell a
negative mathematical answer apart from a bug.
"""


class TriangulationError(ValueError):
    pass


class MalformedChamber(TriangulationError):
    pass


class DuplicateChamber(TriangulationError):
    pass


class NotPseudomanifold(TriangulationError):
    pass


class DisconnectedDual(TriangulationError):
    pass


class BadLink(TriangulationError):
    pass


class NonOrientable(TriangulationError):
    pass


class DimensionOutOfRange(TriangulationError):
    pass


class UnsupportedDimension(TriangulationError):
    pass


class NotACell(TriangulationError):
    pass


class UnknownVertex(TriangulationError):
    pass


class NotAWalk(ValueError):
    pass


class NotClosed(NotAWalk):
    pass


class Unbalanced(ValueError):
    """A non-tree edge failed the commuting check during propagation."""

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class ColouringError(ValueError):
    pass


class WrongColourCount(ColouringError):
    pass


class NotProper(ColouringError):
    pass


class OddColourCount(ColouringError):
    pass


class PreconditionViolated(ColouringError):
    pass


class NotAPathColouring(ColouringError):
    pass


class LinkNotFourColourable(ColouringError):
    pass


class UnsupportedSize(ValueError):
    pass


class OddOrder(ValueError):
    pass


class TooFewVertices(ValueError):
    pass


class UnknownFamily(ValueError):
    pass


class BadParams(ValueError):
    pass


class ParseError(ValueError):
    pass


class InvariantViolation(RuntimeError):
    pass


class InternalUnbalanced(InvariantViolation):
    pass
