"""Tests for the numeric result value objects."""

import pytest

from digit_dirichlet.errors import InvalidInput
from digit_dirichlet.numerics.results import EvalResult, QuadratureResult, complex_to_dict


class TestQuadratureResult:
    """Tests for QuadratureResult."""

    def test_addition_sums_everything(self) -> None:
        """Values, estimates and counts add."""
        total = QuadratureResult(1 + 1j, 1e-12, 10) + QuadratureResult(2.0, 2e-12, 5)
        assert total == QuadratureResult(3 + 1j, 3e-12, 15)

    def test_scaled(self) -> None:
        """Scaling multiplies the estimate by |factor|."""
        scaled = QuadratureResult(2.0, 1e-10, 3).scaled(-2j)
        assert scaled.value == -4j
        assert scaled.abs_error_estimate == pytest.approx(2e-10)

    def test_l1_norm_adds_and_scales(self) -> None:
        """∫|f| adds across pieces and scales by |factor|."""
        total = QuadratureResult(1.0, 0.0, 1, l1_norm=2.0) + QuadratureResult(-1.0, 0.0, 1, l1_norm=3.0)
        assert total.l1_norm == 5.0
        assert total.scaled(3 - 4j).l1_norm == pytest.approx(25.0)
        assert total.to_dict()["l1_norm"] == 5.0

    def test_negative_estimate_rejected(self) -> None:
        """Error estimates are nonnegative."""
        with pytest.raises(InvalidInput):
            QuadratureResult(0.0, -1.0, 1)


class TestEvalResult:
    """Tests for EvalResult."""

    def test_from_expansion_adds_quadrature_error(self) -> None:
        """The quadrature estimate is folded into the total."""
        result = EvalResult.from_expansion(1.0, 1e-12, 6, QuadratureResult(0.0, 3e-12, 7), base=2)
        assert result.abs_error_estimate == pytest.approx(4e-12)
        assert result.K_used == 6
        assert result.parameters == {"base": 2}

    def test_to_dict(self) -> None:
        """Serialization uses re/im pairs."""
        data = EvalResult.exact(1 - 2j, 0.5, N=3).to_dict()
        assert data["value"] == {"re": 1.0, "im": -2.0}
        assert data["abs_error_estimate"] == 0.5
        assert data["quadrature"] is None
        assert data["parameters"] == {"N": 3}

    def test_conjugate(self) -> None:
        """conjugate() flips the value only."""
        result = EvalResult.exact(1 + 1j, 0.1).conjugate()
        assert result.value == 1 - 1j
        assert result.abs_error_estimate == 0.1

    def test_complex_to_dict(self) -> None:
        """Real numbers serialize with im = 0."""
        assert complex_to_dict(2.0) == {"re": 2.0, "im": 0.0}
