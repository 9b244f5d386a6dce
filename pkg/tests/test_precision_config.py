"""
Unit tests for numeric configuration loading.

Tests cover:
- Loading config from YAML file
- Default values when config is missing or malformed
- Validation of precision profiles and Fourier truncations
"""

import pytest

from digit_dirichlet.errors import InvalidInput
from digit_dirichlet.precision_config import (
    FourierTruncation,
    NumericConfig,
    PrecisionProfile,
    get_numeric_config,
    load_numeric_config,
)


class TestLoadNumericConfig:
    """Tests for loading numeric configuration."""

    def test_load_valid_config(self, config_file) -> None:
        """Test loading a complete config.yaml file."""
        path = config_file(
            """
precision:
  target_abs_tol: 1.0e-13
  em_cutoff_N: 80
  em_order_M: 16

series:
  max_bernoulli_K: 30
  pole_guard: 1.0e-8

delange:
  fourier_cutoff: 2000
  grid_step: 0.05

beta_series:
  table_size: 5000
  x_floor: 1.0e-3
"""
        )
        config = load_numeric_config(path)

        assert config.precision.em_cutoff_N == 80
        assert config.precision.em_order_M == 16
        assert config.series.max_bernoulli_K == 30
        assert config.series.pole_guard == 1e-8
        assert config.truncation == FourierTruncation(2000)
        assert config.delange.grid_step == 0.05
        assert config.beta_series.table_size == 5000

    def test_load_missing_config_returns_defaults(self) -> None:
        """Test that a missing config file returns default values."""
        config = load_numeric_config("/nonexistent/path/config.yaml")

        assert config == NumericConfig()
        assert config.truncation.cutoff_K == 1000
        assert config.series.quad_tol == 1e-11

    def test_load_empty_config(self, config_file) -> None:
        """Test loading an empty config file."""
        assert load_numeric_config(config_file("")) == NumericConfig()

    def test_load_partial_config(self, config_file) -> None:
        """Test that unspecified keys keep their defaults."""
        config = load_numeric_config(config_file("delange:\n  fourier_cutoff: 64\n"))

        assert config.delange.fourier_cutoff == 64
        assert config.precision == PrecisionProfile()
        assert config.beta_series.x_floor == 1e-4

    def test_invalid_values_fall_back(self, config_file) -> None:
        """Test that an invalid profile falls back to defaults."""
        config = load_numeric_config(config_file("precision:\n  em_order_M: 7\n"))

        assert config.precision.em_order_M == 14

    def test_malformed_yaml_falls_back(self, config_file) -> None:
        """Test that unparsable YAML falls back to defaults."""
        assert load_numeric_config(config_file("precision: [unclosed\n")) == NumericConfig()

    def test_repository_config(self) -> None:
        """The shipped config.yaml uses a Fourier cutoff of 1000."""
        assert get_numeric_config().truncation.cutoff_K == 1000


class TestProfiles:
    """Tests for PrecisionProfile and FourierTruncation validation."""

    @pytest.mark.parametrize(
        "kwargs",
        [{"target_abs_tol": 1e-16}, {"em_cutoff_N": 0}, {"em_order_M": 3}, {"em_order_M": 0}],
    )
    def test_invalid_profile(self, kwargs: dict) -> None:
        """Out-of-range Euler-Maclaurin parameters raise InvalidInput."""
        with pytest.raises(InvalidInput):
            PrecisionProfile(**kwargs)

    def test_profiles_hashable(self) -> None:
        """Profiles key the coefficient caches."""
        assert hash(PrecisionProfile()) == hash(PrecisionProfile())

    def test_invalid_truncation(self) -> None:
        """cutoff_K must be positive."""
        with pytest.raises(InvalidInput):
            FourierTruncation(0)
