"""Tests for CLI argument models."""

import pytest
from pydantic import ValidationError

from digit_dirichlet.cli.schemas import (
    CommandConfig,
    ComplexValue,
    DelangeQuantity,
    OutputFormat,
    PoleRow,
    Subcommand,
    parse_complex,
)
from digit_dirichlet.errors import InvalidInput
from digit_dirichlet.series.lattice import SeriesTag


class TestParseComplex:
    """Tests for parse_complex."""

    @pytest.mark.parametrize(
        "text, expected",
        [("2.5+0i", 2.5), ("-1.5+0.2i", -1.5 + 0.2j), ("3i", 3j), ("2", 2.0), ("0.5-14.1i", 0.5 - 14.1j)],
    )
    def test_valid(self, text: str, expected: complex) -> None:
        """a+bi forms parse."""
        assert parse_complex(text) == expected

    @pytest.mark.parametrize("text", ["", "2 + i", "1+2j", "abc", "2+i+i"])
    def test_invalid(self, text: str) -> None:
        """Anything else raises InvalidInput."""
        with pytest.raises(InvalidInput):
            parse_complex(text)

    def test_numbers_pass_through(self) -> None:
        """Numbers are converted directly."""
        assert parse_complex(1.5) == 1.5 + 0j


class TestCommandConfig:
    """Tests for CommandConfig validation."""

    def test_eval(self) -> None:
        """A complete eval config parses its tag and point."""
        config = CommandConfig(subcommand="eval", function="fb", base_or_beta=2.0, s="-1.5+0.2i")
        assert config.subcommand is Subcommand.EVAL
        assert config.function is SeriesTag.FB
        assert config.s == -1.5 + 0.2j
        assert config.integer_base == 2
        assert config.output_format is OutputFormat.JSON

    def test_eval_needs_s(self) -> None:
        """eval without --s is rejected."""
        with pytest.raises(ValidationError):
            CommandConfig(subcommand="eval", function="Zb", base_or_beta=2.0)

    def test_poles_need_radius(self) -> None:
        """poles without --radius is rejected."""
        with pytest.raises(ValidationError):
            CommandConfig(subcommand="poles", function="Zb", base_or_beta=2.0)

    @pytest.mark.parametrize(
        "function, base",
        [("Zb", 2.5), ("Fb", 1.0), ("Gbeta", 1.0), ("Fbeta", 0.5)],
    )
    def test_base_guards(self, function: str, base: float) -> None:
        """Integer tags need b >= 2; β tags need β > 1."""
        with pytest.raises(ValidationError):
            CommandConfig(subcommand="poles", function=function, base_or_beta=base, radius=5.0)

    def test_beta_tag_accepts_real_base(self) -> None:
        """β tags accept non-integer bases."""
        config = CommandConfig(subcommand="poles", function="Gbeta", base_or_beta=2.5, radius=5.0, output_format="csv")
        assert config.output_format is OutputFormat.CSV

    def test_unknown_function(self) -> None:
        """Unknown series names are rejected."""
        with pytest.raises(ValidationError):
            CommandConfig(subcommand="eval", function="Hb", base_or_beta=2.0, s="2")

    def test_delange(self) -> None:
        """delange needs β and points; the quantity is coerced."""
        config = CommandConfig(subcommand="delange", base_or_beta=2.5, points=[1.0, 2.0], quantity="S")
        assert config.quantity is DelangeQuantity.S
        with pytest.raises(ValidationError):
            CommandConfig(subcommand="delange", base_or_beta=2.5)

    def test_figures(self) -> None:
        """Unknown figures are rejected."""
        with pytest.raises(ValidationError):
            CommandConfig(subcommand="plot", figures=["fig1", "fig9"])

    @pytest.mark.parametrize("field, value", [("radius", 0.0), ("tol", -1.0), ("tol_scale", 0.0), ("max_abs_m", -1)])
    def test_positive_fields(self, field: str, value: float) -> None:
        """Numeric options respect their bounds."""
        base = {"subcommand": "certify", "function": "Zb", "base_or_beta": 2.0, "radius": 1.0}
        with pytest.raises(ValidationError):
            CommandConfig(**{**base, field: value})


class TestComplexValue:
    """Tests for ComplexValue."""

    def test_of(self) -> None:
        """Splits a complex number into re and im."""
        assert ComplexValue.of(1 - 2j).model_dump() == {"re": 1.0, "im": -2.0}


class TestPoleRow:
    """Tests for PoleRow."""

    @staticmethod
    def _row(b: int | float) -> dict:
        return {
            "tag": "Fb",
            "b": b,
            "k": 0,
            "m": 0,
            "re": 1.0,
            "im": 0.0,
            "order": 1,
            "residue_re": 0.5,
            "residue_im": 0.0,
        }

    def test_integer_base_stays_integer(self) -> None:
        """b = 2 dumps as 2, not 2.0."""
        dumped = PoleRow(**self._row(2)).model_dump()
        assert type(dumped["b"]) is int
        assert dumped["b"] == 2

    def test_real_base_stays_real(self) -> None:
        """β = 2.5 is kept as given."""
        assert PoleRow(**self._row(2.5)).model_dump()["b"] == 2.5
