"""Tests for the β-interpolated series G_β and F_β."""

import numpy as np
import pytest

from digit_dirichlet.delange.coefficients import BetaParam, constant_coefficient
from digit_dirichlet.errors import InvalidInput, OutOfDomain, PoleAt, TableTooShort
from digit_dirichlet.numerics.dirichlet import direct_dirichlet_sum
from digit_dirichlet.series.beta import (
    f_beta_eval,
    fbeta_laurent_at_one,
    g_beta_eval,
    gbeta_laurent_at_two,
    lower_cutoff,
)
from digit_dirichlet.series.integer_base import fb_eval, gb_eval
from digit_dirichlet.series.sbeta_table import build_sbeta_table


@pytest.fixture
def table(small_trunc):
    return build_sbeta_table(2.5, 5000, small_trunc)


class TestGbeta:
    """Tests for g_beta_eval."""

    def test_integer_beta_matches_gb(self, small_trunc) -> None:
        """At β = 2 the interpolation reproduces G_2 up to its estimates."""
        s = 3.5 + 1j
        interpolated = g_beta_eval(2.0, s, small_trunc)
        exact = gb_eval(2, s)
        assert abs(interpolated.value - exact.value) <= 2 * (
            interpolated.abs_error_estimate + exact.abs_error_estimate
        )

    def test_parameters(self, small_trunc) -> None:
        """The cutoff and truncation estimate are reported."""
        result = g_beta_eval(2.5, 3.0, small_trunc)
        assert result.parameters["cutoff_K"] == 64
        assert 0.0 < result.parameters["truncation_estimate"] <= result.abs_error_estimate

    def test_conjugate_symmetry(self, small_trunc) -> None:
        """G_β(conj s) = conj G_β(s)."""
        s = 1.6 + 2.3j
        assert g_beta_eval(2.5, s.conjugate(), small_trunc).value == pytest.approx(
            g_beta_eval(2.5, s, small_trunc).value.conjugate(), abs=1e-10
        )

    def test_domain(self, small_trunc) -> None:
        """Only Re(s) > 1 + 1e-3 is covered."""
        with pytest.raises(OutOfDomain):
            g_beta_eval(2.5, 1.0005, small_trunc)

    def test_poles(self, small_trunc) -> None:
        """2 + iτk are poles."""
        tau = BetaParam(2.5).tau
        with pytest.raises(PoleAt):
            g_beta_eval(2.5, 2.0, small_trunc)
        with pytest.raises(PoleAt):
            g_beta_eval(2.5, complex(2.0, -tau), small_trunc)


class TestLaurentData:
    """Tests for the Laurent data at the double poles."""

    def test_gbeta_at_two(self) -> None:
        """G_β has (a, c_β(0)) at s = 2."""
        a, c0 = gbeta_laurent_at_two(2.5)
        assert a == pytest.approx(BetaParam(2.5).leading)
        assert c0 == pytest.approx(constant_coefficient(2.5))

    def test_fbeta_at_one(self) -> None:
        """F_β has (a, c_β(0) + a) at s = 1."""
        a, a_minus1 = fbeta_laurent_at_one(3.0)
        assert a_minus1 == pytest.approx(constant_coefficient(3.0) + a)


class TestLowerCutoff:
    """Tests for the small-x cutoff."""

    def test_within_range(self, table) -> None:
        """The cutoff lies between the floor and 0.05."""
        assert 1e-4 <= lower_cutoff(table, 1e-11) <= 0.05

    def test_looser_tolerance_allows_smaller_cutoff(self, table) -> None:
        """A looser tolerance never needs a larger x."""
        assert lower_cutoff(table, 1e-6) <= lower_cutoff(table, 1e-11)

    def test_short_table(self, small_trunc) -> None:
        """A 100-entry table cannot resolve a tight tolerance."""
        with pytest.raises(TableTooShort):
            lower_cutoff(build_sbeta_table(2.5, 100, small_trunc), 1e-11)


class TestFbeta:
    """Tests for f_beta_eval."""

    def test_matches_direct_sum_of_table(self, table) -> None:
        """Right of the abscissa F_β is Σ d_β(n) n^-s for the same S_β."""
        s = 2.5 + 0.5j
        N = table.N_max - 1
        d = np.diff(table.values[1:])
        direct = direct_dirichlet_sum(d, s, N, lambda n: 1e-4, sigma_a=1.0)
        result = f_beta_eval(2.5, s, table)
        assert abs(result.value - direct.value) <= direct.abs_error_estimate + result.abs_error_estimate
        assert result.parameters["N_max"] == 5000

    def test_conjugate_symmetry(self, table) -> None:
        """F_β(conj s) = conj F_β(s) in the strip."""
        s = 0.4 + 1.5j
        assert f_beta_eval(2.5, s.conjugate(), table).value == pytest.approx(
            f_beta_eval(2.5, s, table).value.conjugate(), abs=1e-8
        )

    def test_domain(self, table) -> None:
        """Only Re(s) > 1e-3 is covered."""
        with pytest.raises(OutOfDomain):
            f_beta_eval(2.5, 0.0005 + 1j, table)

    def test_pole_at_one(self, table) -> None:
        """s = 1 is a double pole."""
        with pytest.raises(PoleAt):
            f_beta_eval(2.5, 1.0, table)

    def test_table_for_other_beta(self, table) -> None:
        """A table built for another β is refused."""
        with pytest.raises(InvalidInput):
            f_beta_eval(3.0, 2.0, table)

    @pytest.mark.slow
    def test_integer_beta_matches_fb(self) -> None:
        """At β = 2 with the full cutoff F_β agrees with F_2."""
        s = 0.5 + 2j
        assert abs(f_beta_eval(2.0, s).value - fb_eval(2, s).value) < 1e-2
