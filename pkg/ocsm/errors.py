from typing import Optional


class OCSMError(Exception):
    """Base class for every error raised by ocsm."""


class DomainError(OCSMError, ValueError):
    """An operation was called outside of its domain (empty set, i == j, ...)."""


class EdgeListParseError(OCSMError, ValueError):
    def __init__(
        self, line_number: int, line: str, reason: str = "expected two whitespace-separated tokens"
    ):
        self.line_number = line_number
        self.line = line
        super().__init__(f"line {line_number}: {reason}, got {line!r}")


class FeasibilityError(OCSMError):
    """
    Raised when the k-core of the input graph is empty, so no member can
    satisfy the minimum degree constraint.
    """

    def __init__(self, k: int, max_coreness: int):
        self.k = k
        self.max_coreness = max_coreness
        super().__init__(
            f"no {k}-core; maximum coreness is {max_coreness}, try k <= {max_coreness}"
        )


class OracleLimitError(OCSMError):
    def __init__(self, message: str, partial_count: Optional[int] = None):
        self.partial_count = partial_count
        if partial_count is not None:
            message = f"{message} (enumerated {partial_count} candidates before aborting)"
        super().__init__(message)
