"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any


class StarChiError(Exception):
    pass


class OracleScaleError(StarChiError):
    """An exact oracle was asked to run beyond its configured size cap."""


class EnumerationCapExceeded(StarChiError):
    """Stable-subset enumeration in the colouring recursion hit its cap."""


class NotHFree(StarChiError):
    """The input graph contains the excluded pattern as an induced subgraph."""

    def __init__(self, message: str, embedding: Any = None):
        super().__init__(message)
        self.embedding = embedding


class InvariantViolation(StarChiError):
    """A proof invariant failed during colouring; always an implementation bug
    (or, with H-freeness checking off, a non-H-free input)."""

    def __init__(self, message: str, node: Any = None):
        super().__init__(message)
        self.node = node
