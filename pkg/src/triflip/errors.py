"""Exception hierarchy shared by every module.

Each error class name doubles as the stable identifier printed by the CLI.
"""


class TriangulationError(Exception):
    """Base class for every error raised by the package."""


# validation of rotation systems
class InvalidTriangulation(TriangulationError):
    pass


class NonSimple(InvalidTriangulation):
    pass


class AsymmetricAdjacency(InvalidTriangulation):
    pass


class NonTriangularFace(InvalidTriangulation):
    pass


class WrongEdgeCount(InvalidTriangulation):
    pass


class BadOuterFace(InvalidTriangulation):
    pass


class Disconnected(InvalidTriangulation):
    pass


class TooSmall(TriangulationError):
    pass


class ParseError(InvalidTriangulation):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# flips
class NotAnEdge(TriangulationError):
    pass


class IllegalFlip(TriangulationError):
    pass


# algorithm-level failures
class NoSeparatingTriangle(TriangulationError):
    pass


class InternalInconsistency(TriangulationError):
    """An invariant that the theory guarantees was observed to fail."""


class AuditFailure(InternalInconsistency):
    def __init__(self, message, dump=""):
        self.dump = dump
        super().__init__(message)


class Unremovable(TriangulationError):
    pass


class BoundViolation(TriangulationError):
    pass


class HypothesisViolated(TriangulationError):
    pass


class NotFound(InternalInconsistency):
    pass


class NotFourConnected(TriangulationError):
    pass


class NoValidPair(TriangulationError):
    pass


class PreconditionViolated(TriangulationError):
    pass


class BadParameter(TriangulationError):
    pass


class TooLarge(TriangulationError):
    pass


class SizeMismatch(TriangulationError):
    pass
