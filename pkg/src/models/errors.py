"""Exception hierarchy for the toolkit."""

from typing import Any, Optional, Sequence


class DissociationToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidParameterError(DissociationToolkitError, ValueError):
    """A parameter is outside its legal range."""


class InvalidEdgeError(InvalidParameterError):
    """An operation needed an edge that is not present (or vice versa)."""


class VertexIndexError(DissociationToolkitError, IndexError):
    """A vertex id is not in 0..n-1."""


class Graph6ParseError(DissociationToolkitError, ValueError):
    """Malformed graph6 text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ResourceLimitError(DissociationToolkitError):
    """Input is larger than the operation supports."""


class ConvergenceError(DissociationToolkitError):
    """An iterative method stopped before reaching its tolerance."""

    def __init__(self, message: str, best: Any = None):
        super().__init__(message)
        self.best = best


class InvalidIntervalError(DissociationToolkitError, ValueError):
    """Interval endpoints are not ordered."""


class DomainError(DissociationToolkitError, ValueError):
    """A real argument is outside the function's domain."""


class ModelError(DissociationToolkitError):
    """The reduced model found no sign change on its bracket."""

    def __init__(self, message: str, lower: float, upper: float,
                 value_lower: float, value_upper: float):
        super().__init__(
            f"{message}: g({lower:.6g})={value_lower:.6g}, g({upper:.6g})={value_upper:.6g}"
        )
        self.lower = lower
        self.upper = upper
        self.value_lower = value_lower
        self.value_upper = value_upper


class NoCandidatesError(DissociationToolkitError):
    """A search produced no graph satisfying its filter."""


class UnsupportedError(DissociationToolkitError):
    """The requested input is outside what the method is valid for."""


class TieError(DissociationToolkitError):
    """Two or more candidates share the minimum spectral radius exactly."""

    def __init__(self, message: str, tied: Optional[Sequence[Any]] = None):
        super().__init__(message)
        self.tied = list(tied or [])
