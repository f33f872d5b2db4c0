"""Exception hierarchy shared by every module."""


class PerfectGraphError(Exception):
    """Base class for all library errors."""


class InvalidInputError(PerfectGraphError, ValueError):
    """A precondition on an argument does not hold."""


class ResourceLimitError(PerfectGraphError):
    """The input exceeds a configured desk-scale bound."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class InternalInconsistencyError(PerfectGraphError):
    """A proved property failed at runtime; always an implementation bug.

    ``payload`` carries whatever is needed to reproduce the failure,
    normally a text encoding of the offending graph.
    """

    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


class ParseError(PerfectGraphError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
