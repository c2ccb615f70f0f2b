"""Shared exception types."""

from __future__ import annotations

import os


class ParseError(ValueError):
    """Malformed input file; carries the offending path and line number."""

    def __init__(self, path: str | os.PathLike[str], lineno: int, message: str) -> None:
        self.path = os.fspath(path)
        self.lineno = lineno
        super().__init__(f"{self.path}:{lineno}: {message}")


class AlignmentError(ValueError):
    """Matrices or score tables that were built against different node sets."""


class ConvergenceError(RuntimeError):
    """An iterative solver exhausted its iteration budget."""
