"""Exception hierarchy shared by every chordck module."""


class ChordckError(Exception):
    """Base class for all errors raised by chordck."""


class InvalidVertexError(ChordckError, ValueError):
    pass


class InvalidEdgeError(ChordckError, ValueError):
    pass


class InvalidParameterError(ChordckError, ValueError):
    pass


class CapacityError(ChordckError, ValueError):
    pass


class Graph6ParseError(ChordckError, ValueError):
    """Malformed graph6 record; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int, line: int | None = None):
        self.offset = offset
        self.line = line
        where = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{message} (at {where})")


class GenerationRefused(ChordckError):
    """The requested class is not prunable and too large to enumerate blindly."""


class BudgetExceeded(ChordckError):
    """A time budget ran out; ``stats`` carries whatever was completed."""

    def __init__(self, message: str, stats=None):
        self.stats = stats
        super().__init__(message)


class IncompleteVerification(ChordckError):
    """Exhaustive verification was required but could not finish."""

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)
