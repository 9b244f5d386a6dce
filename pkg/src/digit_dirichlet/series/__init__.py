"""Evaluators for Z_b, F_b, G_b and the β-interpolated F_β, G_β."""

from digit_dirichlet.series.beta import (
    f_beta_eval,
    fbeta_laurent_at_one,
    g_beta_eval,
    gbeta_laurent_at_two,
    lower_cutoff,
)
from digit_dirichlet.series.integer_base import (
    fb_eval,
    gb_eval,
    gb_eval_via_fb,
    zb_eval,
    zb_eval_with_error,
    zb_factor_residue,
    zb_laurent_at_zero,
)
from digit_dirichlet.series.lattice import (
    SeriesTag,
    abscissa,
    check_not_pole,
    default_bernoulli_K,
    nearest_lattice_point,
    vertical_spacing,
)
from digit_dirichlet.series.sbeta_table import SbetaTable, build_sbeta_table

__all__ = [
    "SbetaTable",
    "SeriesTag",
    "abscissa",
    "build_sbeta_table",
    "check_not_pole",
    "default_bernoulli_K",
    "f_beta_eval",
    "fb_eval",
    "fbeta_laurent_at_one",
    "g_beta_eval",
    "gb_eval",
    "gb_eval_via_fb",
    "gbeta_laurent_at_two",
    "lower_cutoff",
    "nearest_lattice_point",
    "vertical_spacing",
    "zb_eval",
    "zb_eval_with_error",
    "zb_factor_residue",
    "zb_laurent_at_zero",
]
