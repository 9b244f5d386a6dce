"""Exact base-b digit arithmetic and the Lambert-form power series."""

from digit_dirichlet.digits.cumulative import (
    cumulative_digit_sum,
    cumulative_digit_sums,
    digit_sum_array,
)
from digit_dirichlet.digits.expansion import (
    DigitExpansion,
    IntegerBase,
    b_adic_valuation,
    differenced_digit_sum,
    digit_expansion,
    digit_sum,
    digit_sum_bound,
)
from digit_dirichlet.digits.lambert import digit_sum_power_series, p_exp, p_lambert

__all__ = [
    "DigitExpansion",
    "IntegerBase",
    "b_adic_valuation",
    "cumulative_digit_sum",
    "cumulative_digit_sums",
    "differenced_digit_sum",
    "digit_expansion",
    "digit_sum",
    "digit_sum_array",
    "digit_sum_bound",
    "digit_sum_power_series",
    "p_exp",
    "p_lambert",
]
