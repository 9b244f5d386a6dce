"""Delange's Fourier expansion as an engine for S_β, d_β and h_β."""

from digit_dirichlet.delange.coefficients import (
    BetaParam,
    DelangeCoefficient,
    constant_coefficient,
    decay_constant,
    envelope_violations,
    fitted_envelope,
    delange_coefficient,
    delange_coefficients,
)
from digit_dirichlet.delange.grids import GridRow, beta_grid, figure_grids, write_figure_grids, write_grid
from digit_dirichlet.delange.interpolation import (
    d_beta,
    d_beta_sign_changes,
    fourier_sum,
    h_beta,
    h_beta_tail_bound,
    s_beta,
    s_beta_with_bound,
)

__all__ = [
    "BetaParam",
    "DelangeCoefficient",
    "GridRow",
    "beta_grid",
    "constant_coefficient",
    "d_beta",
    "d_beta_sign_changes",
    "decay_constant",
    "envelope_violations",
    "fitted_envelope",
    "delange_coefficient",
    "delange_coefficients",
    "figure_grids",
    "fourier_sum",
    "h_beta",
    "h_beta_tail_bound",
    "s_beta",
    "s_beta_with_bound",
    "write_figure_grids",
    "write_grid",
]
