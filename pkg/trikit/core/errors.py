"""
trikit exception hierarchy

Every error raised by trikit derives from TrikitError. Errors describing bad
input values also derive from ValueError. Errors produced by a failed
validation carry the ValidationReport naming the first violated condition.
"""

from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from trikit.core.schema import ValidationReport


class TrikitError(Exception):
    """Base class for all trikit errors."""


class ReportedError(TrikitError):
    """Error carrying the validation report that produced it."""

    def __init__(self, message: str, report: Optional["ValidationReport"] = None):
        super().__init__(message)
        self.report = report

    @property
    def witness(self) -> tuple:
        return self.report.witness if self.report else ()


# === ORDERS === #

class OrderError(TrikitError, ValueError):
    """Malformed linear order: duplicate, missing or unknown vertex, or too few elements."""


class RepresentationError(ReportedError, ValueError):
    """Three orders that do not form a standard representation."""


class SuppressionError(TrikitError, ValueError):
    """Suppression of an apex, or of a vertex from a three-element universe."""


class InsertionError(ReportedError, ValueError):
    """Contraction insertion that is malformed or yields a non-standard triple."""


# === GRAPHS === #

class GraphError(TrikitError, ValueError):
    """Invalid simple graph operation (loop, unknown vertex, non-edge contraction)."""


class TriangulationError(ReportedError, ValueError):
    """Graph, rotation and outer triple that do not form a planar triangulation."""


class RotationRecoveryError(TriangulationError):
    """No unique rotation system could be recovered from the abstract graph."""


class ContractionError(TriangulationError):
    """Contraction whose preconditions fail (it would create parallel edges)."""


# === ALGORITHMS === #

class InvariantViolation(TrikitError):
    """An internal post-condition failed; signals a bug, never expected on valid input."""


class SearchCapExceeded(TrikitError, ValueError):
    """Brute-force search requested above the configured vertex cap."""


class FormatError(TrikitError, ValueError):
    """Unparseable orders or graph file."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
