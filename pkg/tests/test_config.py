"""Tests for environment settings."""

import pytest
from pydantic import ValidationError

from digit_dirichlet.config import Settings


class TestSettings:
    """Tests for Settings."""

    def test_defaults(self, monkeypatch) -> None:
        """Without overrides the run is single-threaded reference mode."""
        for name in ("THREADS", "DEBUG", "OUTPUT_DIR", "CONFIG_PATH"):
            monkeypatch.delenv(f"DIGIT_DIRICHLET_{name}", raising=False)
        settings = Settings(_env_file=None)

        assert settings.threads == 1
        assert settings.reference_mode
        assert settings.debug is False
        assert settings.output_dir == "."

    def test_environment_overrides(self, monkeypatch) -> None:
        """DIGIT_DIRICHLET_* variables override the defaults."""
        monkeypatch.setenv("DIGIT_DIRICHLET_THREADS", "8")
        monkeypatch.setenv("DIGIT_DIRICHLET_DEBUG", "true")
        settings = Settings(_env_file=None)

        assert settings.threads == 8
        assert not settings.reference_mode
        assert settings.debug is True

    def test_env_file(self, tmp_path) -> None:
        """Settings are read from a .env file."""
        env_file = tmp_path / ".env"
        env_file.write_text("DIGIT_DIRICHLET_OUTPUT_DIR=/tmp/grids\n")

        assert Settings(_env_file=env_file).output_dir == "/tmp/grids"

    def test_threads_positive(self, monkeypatch) -> None:
        """At least one thread is required."""
        monkeypatch.setenv("DIGIT_DIRICHLET_THREADS", "0")
        with pytest.raises(ValidationError):
            Settings(_env_file=None)

    def test_fields(self) -> None:
        """Every setting is read somewhere in the package."""
        assert set(Settings.model_fields) == {"debug", "threads", "config_path", "output_dir"}
