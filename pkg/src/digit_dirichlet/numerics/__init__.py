"""Quadrature, contour extraction and direct Dirichlet-sum oracles."""

from digit_dirichlet.numerics.contour import laurent_coefficient, laurent_coefficients
from digit_dirichlet.numerics.dirichlet import direct_dirichlet_sum, log_envelope_tail, power_tail
from digit_dirichlet.numerics.quadrature import integrate_zero_to_infinity, mellin_power_series, tanh_sinh
from digit_dirichlet.numerics.results import ContourSpec, EvalResult, QuadratureResult

__all__ = [
    "ContourSpec",
    "EvalResult",
    "QuadratureResult",
    "direct_dirichlet_sum",
    "integrate_zero_to_infinity",
    "laurent_coefficient",
    "laurent_coefficients",
    "log_envelope_tail",
    "mellin_power_series",
    "power_tail",
    "tanh_sinh",
]
