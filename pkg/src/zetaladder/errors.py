"""Exception hierarchy.  Each class carries the CLI exit code it maps to."""

from __future__ import annotations


class ZetaLadderError(Exception):
    exit_code = 1


class ConfigError(ZetaLadderError, ValueError):
    """Invalid or infeasible configuration (bad knob, empty grid, absurd size)."""

    exit_code = 2


class DomainError(ZetaLadderError, ValueError):
    """An argument lies outside the domain where a routine is valid."""

    exit_code = 3


class RangeError(DomainError):
    """A query point lies outside a table or sieve limit."""


class PoleError(DomainError):
    """Evaluation requested at the pole s = 1."""


class SeriesInfeasible(DomainError):
    """A truncated series would need more terms than the configured cap."""


class ConstraintError(DomainError):
    """Interval lengths or parameters violate a stated constraint."""


class NonConvergence(ZetaLadderError, ArithmeticError):
    """An iteration or adaptive refinement did not reach its target."""

    exit_code = 4

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class TableFormatError(ZetaLadderError, OSError):
    """A persisted file is unreadable or has the wrong layout."""

    exit_code = 5
