"""Exception hierarchy shared across the compiler.

Exit-code mapping used by the CLI: parameter errors exit 2, verification
failures exit 3, capacity errors exit 4.
"""

from __future__ import annotations


class QsurgeryError(Exception):
    """Base class for all compiler errors."""

    exit_code = 1


class ParameterError(QsurgeryError):
    """Invalid argument, malformed input, or violated precondition."""

    exit_code = 2


class DimensionError(ParameterError):
    """Operands with mismatched sizes."""


class CodeParseError(ParameterError):
    """Malformed code or suite file; carries a 1-based line and column."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.col = col


class VerificationError(QsurgeryError):
    """A constructed object failed an independent correctness check."""

    exit_code = 3


class AssemblyError(VerificationError):
    """The deformed code cannot be assembled from the given pieces."""


class ExpansionUnreachableError(VerificationError):
    """Expander synthesis exhausted its iteration budget.

    Carries the best spectral gap reached so callers can report how far
    the run got.
    """

    def __init__(self, message: str, best_lambda2: float):
        super().__init__(f"{message} (best lambda2 reached: {best_lambda2:.6g})")
        self.best_lambda2 = best_lambda2


class CapacityError(QsurgeryError):
    """Requested exhaustive computation exceeds the supported size."""

    exit_code = 4
