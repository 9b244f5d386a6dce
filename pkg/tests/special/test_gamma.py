"""Tests for the complex gamma helpers."""

import pytest

from digit_dirichlet.errors import InvalidInput, PoleAt
from digit_dirichlet.special.gamma import complex_gamma, complex_loggamma, gamma_ratio, reciprocal_gamma


class TestComplexGamma:
    """Tests for Γ, log Γ and 1/Γ."""

    def test_against_mpmath(self, mp) -> None:
        """Γ(s) agrees with mpmath at several complex points."""
        for s in (0.5, 3.2 + 1.1j, -2.5 + 0.3j, 1 + 10j):
            expected = complex(mp.gamma(mp.mpc(s)))
            assert abs(complex_gamma(s) - expected) <= 1e-13 * abs(expected)

    def test_loggamma_stays_finite_high_up(self, mp) -> None:
        """log Γ is finite where Γ underflows."""
        s = 0.5 + 1000j
        expected = complex(mp.loggamma(mp.mpc(s)))
        assert abs(complex_loggamma(s) - expected) < 1e-9

    @pytest.mark.parametrize("s", [0, -1, -7])
    def test_poles_raise(self, s: int) -> None:
        """Γ has poles at the nonpositive integers."""
        with pytest.raises(PoleAt):
            complex_gamma(s)

    def test_reciprocal_gamma_vanishes_at_poles(self) -> None:
        """1/Γ is zero at s = -3."""
        assert reciprocal_gamma(-3) == 0


class TestGammaRatio:
    """Tests for Γ(s-1+k)/Γ(s)."""

    def test_small_k(self) -> None:
        """k = 0, 1, 3 give 1/(s-1), 1 and s(s+1)."""
        s = 2.5 + 0.5j
        assert gamma_ratio(s, 0) == pytest.approx(1 / (s - 1))
        assert gamma_ratio(s, 1) == 1
        assert gamma_ratio(s, 3) == pytest.approx(s * (s + 1))

    def test_matches_gamma_quotient(self) -> None:
        """The product equals Γ(s-1+k)/Γ(s)."""
        s = 0.3 + 2j
        assert gamma_ratio(s, 6) == pytest.approx(complex_gamma(s + 5) / complex_gamma(s), rel=1e-13)

    def test_pole_only_for_k_zero(self) -> None:
        """Only k = 0 is singular at s = 1."""
        with pytest.raises(PoleAt):
            gamma_ratio(1.0, 0)
        assert gamma_ratio(1.0, 2) == 1.0

    def test_negative_k_rejected(self) -> None:
        """k must be >= 0."""
        with pytest.raises(InvalidInput):
            gamma_ratio(2.0, -1)
