"""Tests for base-b expansions and digit sums."""

import pytest

from digit_dirichlet.digits.expansion import (
    DigitExpansion,
    IntegerBase,
    b_adic_valuation,
    differenced_digit_sum,
    digit_expansion,
    digit_sum,
    digit_sum_bound,
)
from digit_dirichlet.errors import InvalidInput


class TestIntegerBase:
    """Tests for base validation."""

    @pytest.mark.parametrize("b", [1, 0, -3, 2.5, True])
    def test_rejects_bad_bases(self, b) -> None:
        """Only integers >= 2 are bases."""
        with pytest.raises(InvalidInput):
            IntegerBase(b)


class TestDigitExpansion:
    """Tests for digit_expansion."""

    def test_low_digit_first(self) -> None:
        """1234 in base 10 is stored as (4, 3, 2, 1)."""
        expansion = digit_expansion(10, 1234)
        assert expansion.digits == (4, 3, 2, 1)
        assert expansion.evaluate() == 1234
        assert len(expansion) == 4

    def test_inconsistent_digits_rejected(self) -> None:
        """A DigitExpansion must evaluate to its value."""
        with pytest.raises(InvalidInput):
            DigitExpansion(IntegerBase(2), (1, 1), 4)

    def test_zero_rejected(self) -> None:
        """Expansions are for positive integers."""
        with pytest.raises(InvalidInput):
            digit_expansion(2, 0)


class TestDigitSum:
    """Tests for d_b and its differences."""

    @pytest.mark.parametrize("b, n, expected", [(2, 0, 0), (2, 7, 3), (3, 26, 6), (10, 9999, 36), (10, 1000, 1)])
    def test_values(self, b: int, n: int, expected: int) -> None:
        """Small hand-checked values."""
        assert digit_sum(b, n) == expected

    def test_matches_expansion(self) -> None:
        """digit_sum agrees with the expansion's digit_sum."""
        assert all(digit_sum(7, n) == digit_expansion(7, n).digit_sum for n in range(1, 500))

    def test_valuation(self) -> None:
        """v_2(48) = 4 and v_3(10) = 0."""
        assert b_adic_valuation(2, 48) == 4
        assert b_adic_valuation(3, 10) == 0

    @pytest.mark.parametrize("b", [2, 3, 10])
    def test_difference_formula(self, b: int) -> None:
        """d_b(n) - d_b(n-1) = 1 - v_b(n)(b-1)."""
        for n in range(1, 2000):
            assert differenced_digit_sum(b, n) == digit_sum(b, n) - digit_sum(b, n - 1)

    def test_bound(self) -> None:
        """d_b(n) never exceeds (b-1) times the digit count."""
        assert all(digit_sum(5, n) <= digit_sum_bound(5, n) for n in range(1, 3000))

    def test_argument_range(self) -> None:
        """Arguments beyond 2^53 are refused."""
        with pytest.raises(InvalidInput):
            digit_sum(2, 2**53 + 1)
