"""Pydantic models for CLI configuration and output payloads."""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from digit_dirichlet.delange.coefficients import BETA_GUARD
from digit_dirichlet.errors import InvalidInput
from digit_dirichlet.series.lattice import SeriesTag

# =============================================================================
# Argument parsing helpers
# =============================================================================


def parse_complex(text: str | complex | float) -> complex:
    """
    Parse `a+bi`, `a-bi`, `a` or `bi` (no spaces) into a complex number.

    Raises:
        InvalidInput: for anything else.
    """
    if isinstance(text, (complex, int, float)):
        return complex(text)
    raw = str(text).strip()
    if not raw or " " in raw or "j" in raw.lower():
        raise InvalidInput(f"expected a complex number like 2.5+0i, got {text!r}")
    try:
        return complex(raw.replace("i", "j").replace("I", "j"))
    except ValueError as e:
        raise InvalidInput(f"expected a complex number like 2.5+0i, got {text!r}") from e


class Subcommand(str, Enum):
    EVAL = "eval"
    POLES = "poles"
    CERTIFY = "certify"
    DELANGE = "delange"
    PLOT = "plot"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class DelangeQuantity(str, Enum):
    """What `delange` evaluates at each point."""

    COEFFICIENT = "c"
    H = "h"
    S = "S"
    D = "d"


# =============================================================================
# Command configuration
# =============================================================================


class CommandConfig(BaseModel):
    """Validated arguments of one CLI invocation."""

    model_config = ConfigDict(arbitrary_types_allowed=True, use_enum_values=False)

    subcommand: Subcommand
    function: SeriesTag | None = None
    base_or_beta: float | None = None
    s: complex | None = None
    radius: float | None = Field(None, gt=0)
    output_format: OutputFormat = OutputFormat.JSON
    tol: float | None = Field(None, gt=0)
    fourier_cutoff: int | None = Field(None, ge=1)
    bernoulli_K: int | None = Field(None, ge=1, description="None means the default rule")

    quantity: DelangeQuantity = DelangeQuantity.H
    points: list[float] = Field(default_factory=list)
    grid_step: float | None = Field(None, gt=0)
    output_dir: str | None = None
    figures: list[str] = Field(default_factory=lambda: ["fig1", "fig2", "fig3"])
    max_abs_m: int | None = Field(None, ge=0)

    only: list[str] | None = None
    tol_scale: float = Field(1.0, gt=0)

    @field_validator("function", mode="before")
    @classmethod
    def parse_function(cls, v: Any) -> SeriesTag | None:
        return None if v is None else SeriesTag.parse(v)

    @field_validator("s", mode="before")
    @classmethod
    def parse_s(cls, v: Any) -> complex | None:
        return None if v is None else parse_complex(v)

    @field_validator("figures")
    @classmethod
    def validate_figures(cls, v: list[str]) -> list[str]:
        unknown = [name for name in v if name not in ("fig1", "fig2", "fig3")]
        if unknown:
            raise ValueError(f"unknown figures {unknown}")
        return v

    @model_validator(mode="after")
    def check_domain_guards(self) -> "CommandConfig":
        needs_series = {Subcommand.EVAL, Subcommand.POLES, Subcommand.CERTIFY}
        if self.subcommand in needs_series and (self.function is None or self.base_or_beta is None):
            raise ValueError(f"{self.subcommand.value} needs --function and --base/--beta")
        if self.subcommand is Subcommand.EVAL and self.s is None:
            raise ValueError("eval needs --s")
        if self.subcommand in (Subcommand.POLES, Subcommand.CERTIFY) and self.radius is None:
            raise ValueError(f"{self.subcommand.value} needs --radius")
        if self.subcommand is Subcommand.DELANGE and (self.base_or_beta is None or not self.points):
            raise ValueError("delange needs --beta and at least one --at point")

        if self.base_or_beta is not None:
            beta_like = self.subcommand is Subcommand.DELANGE or (self.function is not None and self.function.is_beta)
            if beta_like:
                if not self.base_or_beta >= 1.0 + BETA_GUARD:
                    raise ValueError(f"beta must be > 1, got {self.base_or_beta}")
            elif not float(self.base_or_beta).is_integer() or self.base_or_beta < 2:
                raise ValueError(f"base must be an integer >= 2, got {self.base_or_beta}")
        return self

    @property
    def integer_base(self) -> int:
        return int(self.base_or_beta)


# =============================================================================
# Output payloads
# =============================================================================


class ComplexValue(BaseModel):
    re: float
    im: float

    @classmethod
    def of(cls, z: complex) -> "ComplexValue":
        z = complex(z)
        return cls(re=z.real, im=z.imag)


class EvalOutput(BaseModel):
    """Result of `eval`."""

    function: str
    base: float
    s: ComplexValue
    value: ComplexValue
    abs_error_estimate: float
    K_used: int | None = None
    parameters: dict[str, Any] = Field(default_factory=dict)


class PoleRow(BaseModel):
    """One row of the pole table; field names are part of the output contract."""

    tag: str
    b: int | float
    k: int
    m: int
    re: float
    im: float
    order: int
    residue_re: float
    residue_im: float
    laurent2_re: float | None = None
    laurent2_im: float | None = None
    laurent1_re: float | None = None
    laurent1_im: float | None = None
    flag: str | None = None


class ErrorObject(BaseModel):
    kind: str
    message: str
    location: ComplexValue | None = None


class ErrorResponse(BaseModel):
    """Machine-readable error printed on failure."""

    error: ErrorObject


class CriterionReport(BaseModel):
    """Verdict of one acceptance criterion."""

    index: int
    name: str
    description: str
    passed: bool
    measured: dict[str, Any] = Field(default_factory=dict)
    error: str | None = None
    runtime_s: float = Field(..., ge=0.0)


class VerifyReport(BaseModel):
    """Output of `verify`, criteria in index order."""

    passed: bool
    tol_scale: float
    criteria: list[CriterionReport]
