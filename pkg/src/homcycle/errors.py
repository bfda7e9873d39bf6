"""Exception types shared across the package."""

from __future__ import annotations


class HomcycleError(Exception):
    """Base class for all library-specific errors."""


class BadKError(HomcycleError):
    """The cycle length k is out of range for the requested operation."""


class NotAHomomorphismError(HomcycleError):
    """A value assignment violates the +-1 rule on some edge.

    The offending edge (first in sorted edge order) is stored in ``edge``.
    """

    def __init__(self, edge: tuple[int, int], message: str | None = None):
        self.edge = edge
        super().__init__(message or f"edge {edge} violates the +-1 adjacency rule")


class TypeUndefinedError(HomcycleError):
    """Positive/negative move types are undefined (k = 4 or isolated vertex)."""


class CapExceededError(HomcycleError):
    """An enumeration or oracle size cap was exceeded."""


class NotInDError(HomcycleError):
    """The point violates a slack inequality of the shift lattice."""


class NotInEError(HomcycleError):
    """The point lies outside the universal-cover vertex set."""


class SimplexCellsPresentError(HomcycleError):
    """The 1-skeleton contains a triangle, so cells beyond squares arise."""


class DocumentError(HomcycleError):
    """A graph document failed to parse or validate."""
