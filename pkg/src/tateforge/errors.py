"""Exception hierarchy shared by every tateforge module."""


class TateforgeError(Exception):
    """Base class for all library errors."""


class SchemaError(TateforgeError):
    """Malformed input record; message names the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class PrecisionError(TateforgeError):
    """A certification failed because stored precision cannot decide it.

    Raised whenever an operation would have to guess the side of a strict
    inequality from an at-most bound, or when a cap/truncation has been
    consumed.  Callers that report three-valued verdicts map this to
    INDETERMINATE, never to FAIL.
    """


class NotDistinguishedError(TateforgeError):
    """Definite refusal: no degree satisfies the distinguished conditions."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class NonUnitError(TateforgeError):
    """Inversion requested for an element certified (or not certifiable) as a unit."""


class ScaleMismatchError(TateforgeError):
    """Comparison of norm exponents living in incompatible quadratic scales."""


class LimitError(TateforgeError):
    """A configured ceiling was exceeded (degree bound, Witt length, root denominators)."""
