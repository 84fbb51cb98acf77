"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument falls outside an operation's documented domain."""


class EdgeListFormatError(ValueError):
    """An edge-list file is malformed; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BudgetExceededError(RuntimeError):
    """The exact solver hit its node budget before finishing."""


class ConstructionInfeasibleError(DomainError):
    """A fixed coloring rule cannot apply at this parameter.

    Raised instead of silently falling back; carries the exact optimal
    coloring so callers can report the true value as evidence.
    """

    def __init__(self, message: str, exact_coloring):
        super().__init__(message)
        self.exact_coloring = exact_coloring

    @property
    def exact_colors(self) -> int:
        return self.exact_coloring.num_colors
