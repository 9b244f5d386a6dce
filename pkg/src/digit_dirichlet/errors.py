"""
Exception hierarchy shared by every module.

Each error carries a short ``kind`` string; the CLI reports it in its
machine-readable error object and maps it to an exit code.
"""


class DigitDirichletError(Exception):
    """Base class for all library errors."""

    kind = "Error"

    def to_dict(self) -> dict:
        """Serialize for the CLI error object."""
        return {"kind": self.kind, "message": str(self), "location": None}


class PoleAt(DigitDirichletError):
    """Raised when a function is evaluated at (or too close to) one of its poles."""

    kind = "PoleAt"

    def __init__(self, location: complex, message: str | None = None) -> None:
        self.location = complex(location)
        super().__init__(message or f"pole at s = {self.location}")

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["location"] = {"re": self.location.real, "im": self.location.imag}
        return data


class OutOfDomain(DigitDirichletError):
    """Raised when an argument lies outside the region an evaluator supports."""

    kind = "OutOfDomain"


class NonConvergence(DigitDirichletError):
    """Raised when an error estimate cannot be brought under tolerance."""

    kind = "NonConvergence"


class InvalidInput(DigitDirichletError, ValueError):
    """Raised for malformed arguments (bad base, nonpositive n, ...)."""

    kind = "InvalidInput"


class SymmetryViolation(DigitDirichletError):
    """Raised when a quantity that must be real carries a large imaginary residue."""

    kind = "SymmetryViolation"


class TableTooShort(DigitDirichletError):
    """Raised when an S_beta table is too short for a required quadrature node."""

    kind = "TableTooShort"
