"""Shared test fixtures and configuration."""

from unittest.mock import patch

import mpmath
import pytest

from digit_dirichlet.precision_config import FourierTruncation, PrecisionProfile


@pytest.fixture
def mp():
    """mpmath at 30 significant digits as an independent oracle."""
    with mpmath.workdps(30):
        yield mpmath


@pytest.fixture
def profile() -> PrecisionProfile:
    """Default precision profile."""
    return PrecisionProfile()


@pytest.fixture
def small_trunc() -> FourierTruncation:
    """Fourier cutoff small enough for fast β tests."""
    return FourierTruncation(64)


@pytest.fixture
def config_file(tmp_path):
    """Write a config.yaml into tmp_path and return its path."""

    def write(content: str):
        path = tmp_path / "config.yaml"
        path.write_text(content)
        return path

    return write


@pytest.fixture
def threaded_settings():
    """Settings patched to allow four worker threads."""
    with patch("digit_dirichlet.config.settings.threads", 4):
        yield