"""Value objects returned by the numerical engines."""

from dataclasses import dataclass, field
from typing import Any

from digit_dirichlet.errors import InvalidInput


def complex_to_dict(z: complex) -> dict[str, float]:
    """Serialize a complex number as {"re": ..., "im": ...}."""
    z = complex(z)
    return {"re": z.real, "im": z.imag}


@dataclass(frozen=True)
class QuadratureResult:
    """Result of a quadrature: value, estimated absolute error and cost.

    l1_norm approximates ∫|f|, the scale below which cancellation makes the
    value meaningless in double precision.
    """

    value: complex
    abs_error_estimate: float
    evaluation_count: int
    l1_norm: float = 0.0

    def __post_init__(self) -> None:
        if not self.abs_error_estimate >= 0.0:
            raise InvalidInput(f"error estimate must be >= 0, got {self.abs_error_estimate}")

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            self.value + other.value,
            self.abs_error_estimate + other.abs_error_estimate,
            self.evaluation_count + other.evaluation_count,
            self.l1_norm + other.l1_norm,
        )

    def scaled(self, factor: complex) -> "QuadratureResult":
        """Multiply value and error estimate by a constant."""
        scale = abs(factor)
        return QuadratureResult(
            self.value * factor, self.abs_error_estimate * scale, self.evaluation_count, self.l1_norm * scale
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "value": complex_to_dict(self.value),
            "abs_error_estimate": self.abs_error_estimate,
            "evaluation_count": self.evaluation_count,
            "l1_norm": self.l1_norm,
        }


@dataclass
class EvalResult:
    """
    A series value with its error estimate and the parameters actually used.

    The error estimate is the sum of the quadrature and special-function
    estimates that went into the value.
    """

    value: complex
    abs_error_estimate: float
    K_used: int | None = None
    quadrature: QuadratureResult | None = None
    parameters: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def exact(cls, value: complex, error: float = 0.0, **parameters: Any) -> "EvalResult":
        """Result of a closed-form evaluation."""
        return cls(value=complex(value), abs_error_estimate=float(error), parameters=parameters)

    @classmethod
    def from_expansion(
        cls,
        value: complex,
        error: float,
        K: int,
        quadrature: QuadratureResult | None = None,
        **parameters: Any,
    ) -> "EvalResult":
        """Result of a truncated expansion plus an integrated remainder."""
        total = float(error) + (quadrature.abs_error_estimate if quadrature else 0.0)
        return cls(value=complex(value), abs_error_estimate=total, K_used=K, quadrature=quadrature, parameters=parameters)

    def conjugate(self) -> "EvalResult":
        return EvalResult(
            self.value.conjugate(), self.abs_error_estimate, self.K_used, self.quadrature, dict(self.parameters)
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "value": complex_to_dict(self.value),
            "abs_error_estimate": self.abs_error_estimate,
            "K_used": self.K_used,
            "quadrature": self.quadrature.to_dict() if self.quadrature else None,
            "parameters": self.parameters,
        }


@dataclass(frozen=True)
class ContourSpec:
    """A circle |s - center| = radius sampled at node_count equispaced nodes."""

    center: complex
    radius: float
    node_count: int = 64

    def __post_init__(self) -> None:
        if not self.radius > 0.0:
            raise InvalidInput(f"contour radius must be positive, got {self.radius}")
        n = self.node_count
        if n < 32 or n & (n - 1):
            raise InvalidInput(f"node_count must be a power of two >= 32, got {n}")

    def doubled(self) -> "ContourSpec":
        return ContourSpec(self.center, self.radius, 2 * self.node_count)
