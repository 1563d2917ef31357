"""
Exception hierarchy for the Enriques moduli toolkit.
"""


class EnriquesError(Exception):
    """Base class for all toolkit errors."""


class LatticeError(EnriquesError):
    """Errors raised by lattice arithmetic and enumeration."""


class NotARoot(LatticeError, ValueError):
    """A reflection was requested in a class whose self-pairing is not -2."""


class BoundTooLarge(LatticeError):
    """An enumeration would visit more candidates than the configured search limit."""

    def __init__(self, message: str, limit: int):
        super().__init__(message)
        self.limit = limit


class ParityViolation(EnriquesError, ValueError):
    """A Mukai vector violates a2 = r (mod 2)."""


class SurfaceError(EnriquesError):
    """Errors raised by surface-model searches."""


class InvalidSurface(SurfaceError, ValueError):
    """A surface model failed validation."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class NonTermination(SurfaceError):
    """Weyl reduction hit its iteration cap (the model is not a valid chamber)."""


class SearchBoundExceeded(SurfaceError):
    """A root-combination search could not decide within its bounds."""


class NotFoundWithinBound(SurfaceError):
    """An isotropic companion exists but lies outside the height bound."""


class InputError(EnriquesError, ValueError):
    """Malformed user input (vector text, descriptor files)."""


class ParseError(InputError):
    """Syntax error with a 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1, source: str | None = None):
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.source = source
