"""Application configuration using Pydantic settings."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings loaded from environment variables (prefix DIGIT_DIRICHLET_)."""

    model_config = SettingsConfigDict(
        env_prefix="DIGIT_DIRICHLET_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    debug: bool = False

    # Concurrency cap; 1 means single-threaded reference mode
    threads: int = Field(default=1, ge=1)

    # Explicit config.yaml location (searched for when unset)
    config_path: str | None = None

    # Where `plot` writes fig{1,2,3}_beta_grid.csv
    output_dir: str = "."

    @property
    def reference_mode(self) -> bool:
        """Single-threaded, bit-reproducible evaluation."""
        return self.threads == 1


settings = Settings()
