"""Exception hierarchy shared by the graph engine, the suite and the CLI."""

from typing import Optional

EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class Gamma3Error(Exception):
    """Base class for every error raised by this package."""

    exit_code: int = EXIT_CHECK_FAILURE


class InvalidSizeError(Gamma3Error, ValueError):
    """A size parameter (vertex count, n of CS_n, ...) is out of range."""

    exit_code = EXIT_USAGE


class InvalidKError(Gamma3Error, ValueError):
    """Token count k is 0 or exceeds the number of base vertices."""

    exit_code = EXIT_USAGE


class DomainError(Gamma3Error, ValueError):
    """An argument lies outside the domain of the operation."""

    exit_code = EXIT_USAGE


class MappingError(DomainError):
    """A vertex mapping is not a bijection between the two vertex sets."""


class TokenIndexError(Gamma3Error, IndexError):
    """A colex rank or subset lies outside the ranked range."""

    exit_code = EXIT_USAGE


class Graph6ParseError(Gamma3Error, ValueError):
    """Malformed graph6 input."""

    exit_code = EXIT_USAGE

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ArityError(Gamma3Error, ValueError):
    """An n-ary construction received too few operands."""

    exit_code = EXIT_USAGE


class ResourceError(Gamma3Error):
    """A solver budget would be exceeded."""

    exit_code = EXIT_RESOURCE

    def __init__(self, invariant: str, size: int, limit: int, unit: str = "vertices") -> None:
        super().__init__(f"{invariant}: {size} {unit} exceeds the budget of {limit}")
        self.invariant = invariant
        self.size = size
        self.limit = limit


class StructuralError(Gamma3Error):
    """Two labeled graphs do not have the same vertex labels."""

    def __init__(self, message: str, vertex: Optional[str] = None) -> None:
        super().__init__(message if vertex is None else f"{message}: {vertex}")
        self.vertex = vertex


class SolverConsistencyError(Gamma3Error):
    """Computed invariants contradict each other."""
