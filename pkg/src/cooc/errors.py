"""Exception hierarchy.

Validation errors raised while loading records carry ``index``, the
position of the offending record in the caller's input sequence, so file
readers can translate it into a line number.
"""


class CoocError(ValueError):
    """Base class for every error raised by this package."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


# geometry
class MapError(CoocError):
    pass


class NonMonotonicMap(MapError):
    pass


class OutOfBounds(MapError):
    pass


# corpus
class CorpusError(CoocError):
    pass


class OverlappingSpans(CorpusError):
    pass


class NonMonotonicSpans(CorpusError):
    pass


class LengthMismatch(CorpusError):
    pass


class AlignmentError(CorpusError):
    pass


class OverlappingBlocks(AlignmentError):
    pass


class NonMonotonicBlocks(AlignmentError):
    pass


class SegmentOutOfRange(AlignmentError):
    pass


class EmptyBlockSide(AlignmentError):
    pass


# filters
class MissingTags(CoocError):
    pass


# oracle
class TooLarge(CoocError):
    pass


class IsolatedVertex(CoocError):
    pass


class InvariantError(AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class InputFormatError(CoocError):
    """A file could not be parsed or validated.

    ``path`` and ``line`` (1-based) locate the problem.
    """

    def __init__(self, path, line: int | None, message: str):
        where = f"{path}:{line}" if line is not None else str(path)
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line
