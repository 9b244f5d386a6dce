"""
Numeric configuration from config.yaml.

This module loads the precision profile, Fourier truncation and other
numeric defaults from the config.yaml file. These are separate from the
environment-based settings in config.py.

config.yaml is for:
- Euler-Maclaurin parameters and target tolerance
- Bernoulli truncation limits and pole guard band
- Delange Fourier cutoff and grid step
- S_beta table size and quadrature floor

.env / DIGIT_DIRICHLET_* is for:
- Thread cap (reference mode)
- Debug logging
- Output directory
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import yaml

from digit_dirichlet.config import settings
from digit_dirichlet.errors import InvalidInput

logger = logging.getLogger(__name__)

# Default config paths to check (in order)
CONFIG_SEARCH_PATHS = [
    Path.cwd() / "config.yaml",  # Current working directory
    Path(__file__).parent.parent.parent / "config.yaml",  # Relative to source
    Path.home() / ".config" / "digit_dirichlet" / "config.yaml",  # User config dir
]


@dataclass(frozen=True)
class PrecisionProfile:
    """Accuracy targets and Euler-Maclaurin parameters for the special-function engine."""

    target_abs_tol: float = 1e-12
    em_cutoff_N: int = 64
    em_order_M: int = 14
    reflection_threshold: float = 0.5

    def __post_init__(self) -> None:
        if not self.target_abs_tol >= 1e-14:
            raise InvalidInput(f"target_abs_tol must be >= 1e-14, got {self.target_abs_tol}")
        if self.em_cutoff_N < 1:
            raise InvalidInput(f"em_cutoff_N must be positive, got {self.em_cutoff_N}")
        if self.em_order_M < 2 or self.em_order_M % 2:
            raise InvalidInput(f"em_order_M must be a positive even integer, got {self.em_order_M}")


@dataclass(frozen=True)
class FourierTruncation:
    """Symmetric cutoff |k| <= cutoff_K for the Fourier series of h_beta."""

    cutoff_K: int = 1000

    def __post_init__(self) -> None:
        if self.cutoff_K < 1:
            raise InvalidInput(f"cutoff_K must be >= 1, got {self.cutoff_K}")


@dataclass
class SeriesDefaults:
    """Defaults for the integer-base continuations."""

    max_bernoulli_K: int = 40
    pole_guard: float = 1e-6
    quad_tol: float = 1e-11


@dataclass
class DelangeDefaults:
    """Defaults for the Delange engine and figure grids."""

    fourier_cutoff: int = 1000
    grid_step: float = 0.01


@dataclass
class BetaSeriesDefaults:
    """Defaults for the beta-series evaluators."""

    table_size: int = 100_000
    x_floor: float = 1e-4


@dataclass
class NumericConfig:
    """Complete numeric configuration from config.yaml."""

    precision: PrecisionProfile = field(default_factory=PrecisionProfile)
    series: SeriesDefaults = field(default_factory=SeriesDefaults)
    delange: DelangeDefaults = field(default_factory=DelangeDefaults)
    beta_series: BetaSeriesDefaults = field(default_factory=BetaSeriesDefaults)

    @property
    def truncation(self) -> FourierTruncation:
        """Default Fourier truncation."""
        return FourierTruncation(self.delange.fourier_cutoff)


def _find_config_file(config_path: Path | str | None = None) -> Path | None:
    """
    Find the config.yaml file.

    Args:
        config_path: Explicit path to use. If None, searches default locations.

    Returns:
        Path to config file, or None if not found.
    """
    if config_path is not None:
        path = Path(config_path)
        if path.exists():
            return path
        return None

    for path in CONFIG_SEARCH_PATHS:
        if path.exists():
            logger.debug(f"Found config file at {path}")
            return path

    return None


def load_numeric_config(config_path: Path | str | None = None) -> NumericConfig:
    """
    Load numeric configuration from config.yaml.

    Args:
        config_path: Path to config.yaml. Searches default locations if None.

    Returns:
        NumericConfig with loaded or default values.
    """
    found_path = _find_config_file(config_path)

    if found_path is None:
        searched = [str(config_path)] if config_path else [str(p) for p in CONFIG_SEARCH_PATHS]
        logger.warning(f"Config file not found in {searched}, using defaults")
        return NumericConfig()

    try:
        raw_config = yaml.safe_load(found_path.read_text())

        if raw_config is None:
            return NumericConfig()

        precision_section = raw_config.get("precision", {}) or {}
        series_section = raw_config.get("series", {}) or {}
        delange_section = raw_config.get("delange", {}) or {}
        beta_section = raw_config.get("beta_series", {}) or {}

        precision = PrecisionProfile(
            target_abs_tol=float(precision_section.get("target_abs_tol", 1e-12)),
            em_cutoff_N=int(precision_section.get("em_cutoff_N", 64)),
            em_order_M=int(precision_section.get("em_order_M", 14)),
            reflection_threshold=float(precision_section.get("reflection_threshold", 0.5)),
        )

        return NumericConfig(
            precision=precision,
            series=SeriesDefaults(
                max_bernoulli_K=int(series_section.get("max_bernoulli_K", 40)),
                pole_guard=float(series_section.get("pole_guard", 1e-6)),
                quad_tol=float(series_section.get("quad_tol", 1e-11)),
            ),
            delange=DelangeDefaults(
                fourier_cutoff=int(delange_section.get("fourier_cutoff", 1000)),
                grid_step=float(delange_section.get("grid_step", 0.01)),
            ),
            beta_series=BetaSeriesDefaults(
                table_size=int(beta_section.get("table_size", 100_000)),
                x_floor=float(beta_section.get("x_floor", 1e-4)),
            ),
        )

    except (yaml.YAMLError, InvalidInput, TypeError, ValueError, AttributeError) as e:
        logger.error(f"Failed to load config.yaml: {e}")
        return NumericConfig()


@lru_cache(maxsize=1)
def get_numeric_config() -> NumericConfig:
    """
    Get cached numeric configuration.

    Returns:
        NumericConfig loaded from config.yaml (cached).
    """
    return load_numeric_config(settings.config_path)


def default_profile() -> PrecisionProfile:
    """Precision profile from config.yaml."""
    return get_numeric_config().precision
