"""Complex special-function engine: ζ, ζ', Γ and exact Bernoulli numbers."""

from digit_dirichlet.special.bernoulli import (
    bernoulli_float_table,
    bernoulli_number,
    bernoulli_over_factorial,
)
from digit_dirichlet.special.gamma import (
    complex_gamma,
    complex_loggamma,
    gamma_ratio,
    reciprocal_gamma,
)
from digit_dirichlet.special.zeta import (
    chi_factor,
    riemann_zeta,
    riemann_zeta_derivative,
    riemann_zeta_derivative_with_error,
    riemann_zeta_with_error,
)

__all__ = [
    "bernoulli_float_table",
    "bernoulli_number",
    "bernoulli_over_factorial",
    "chi_factor",
    "complex_gamma",
    "complex_loggamma",
    "gamma_ratio",
    "reciprocal_gamma",
    "riemann_zeta",
    "riemann_zeta_derivative",
    "riemann_zeta_derivative_with_error",
    "riemann_zeta_with_error",
]
