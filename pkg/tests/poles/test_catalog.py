"""Tests for the closed-form pole catalog."""

import logging
import math
from unittest.mock import patch

import pytest

from digit_dirichlet.delange.coefficients import BetaParam, constant_coefficient, delange_coefficients
from digit_dirichlet.errors import InvalidInput
from digit_dirichlet.poles.catalog import (
    REMOVABLE_FLAG,
    ROW_FIELDS,
    count_poles,
    descriptor_to_row,
    enumerate_poles,
    pole_count_ratios,
)
from digit_dirichlet.series.lattice import SeriesTag


class TestEnumeratePoles:
    """Tests for enumerate_poles on the integer bases."""

    def test_fb_real_axis(self) -> None:
        """Inside radius 8, F_2 has poles only on the real axis."""
        poles = enumerate_poles("Fb", 2, 8)
        assert [p.location.real for p in poles] == [0.0, 1.0, -1.0, -3.0, -5.0, -7.0]
        assert all(p.m == 0 for p in poles)

    def test_fb_double_pole(self) -> None:
        """s = 1 is a double pole with a_{-2} = (b-1)/(2 log b)."""
        top = next(p for p in enumerate_poles("Fb", 2, 8) if p.location == 1)
        L = math.log(2)
        assert top.order == 2
        assert top.laurent_minus2 == pytest.approx(1 / (2 * L))
        assert top.laurent_minus1 == pytest.approx(math.log(2 * math.pi) / (2 * L) - 3 / 4)

    def test_fb_residue_at_minus_one(self) -> None:
        """The k = 2 residue on the real axis is -(b-1)/(24 log b)."""
        pole = next(p for p in enumerate_poles("Fb", 10, 2) if p.location == -1)
        assert pole.residue == pytest.approx(-9 / (24 * math.log(10)))

    def test_fb_residue_at_zero(self) -> None:
        """The k = 1 residue at 0 is (b-1)/(4 log b)."""
        pole = next(p for p in enumerate_poles("Fb", 2, 2) if p.location == 0)
        assert pole.residue == pytest.approx(1 / (4 * math.log(2)))
        assert pole.residue == pytest.approx(0.36067, abs=1e-5)

    def test_gb_isolated_pole(self) -> None:
        """G_3 has residue (b+1)/12 = 1/3 at s = 1."""
        pole = next(p for p in enumerate_poles("Gb", 3, 3) if p.location == 1)
        assert (pole.k, pole.m, pole.order) == (1, 0, 1)
        assert pole.residue == pytest.approx(1 / 3)

    def test_zb_count(self) -> None:
        """Z_2 within radius 20 has m = -2..2."""
        poles = enumerate_poles("Zb", 2, 20)
        assert sorted(p.m for p in poles) == [-2, -1, 0, 1, 2]
        assert poles[0].residue == pytest.approx(1 / (2 * math.log(2)))

    def test_sorted_by_modulus(self) -> None:
        """Descriptors come in increasing |location|."""
        moduli = [abs(p.location) for p in enumerate_poles("Gb", 3, 15)]
        assert moduli == sorted(moduli)

    def test_conjugate_pairs(self) -> None:
        """Off-axis poles come in conjugate pairs with conjugate residues."""
        poles = enumerate_poles("Fb", 3, 12)
        by_point = {(p.k, p.m): p for p in poles}
        for (k, m), pole in by_point.items():
            mirror = by_point[(k, -m)]
            assert mirror.location == pole.location.conjugate()
            assert mirror.residue == pytest.approx(pole.residue.conjugate(), abs=1e-14)

    def test_integer_valued_float_base(self) -> None:
        """A base given as 10.0 is accepted for the integer tags."""
        assert count_poles("Zb", 10.0, 10) == count_poles("Zb", 10, 10)

    @pytest.mark.parametrize("tag, base, radius", [("Zb", 1, 5), ("Fb", 2.5, 5), ("Gb", 3, 0), ("Gb", 3, math.inf)])
    def test_invalid_arguments(self, tag: str, base: float, radius: float) -> None:
        """Bad bases and radii raise InvalidInput."""
        with pytest.raises(InvalidInput):
            enumerate_poles(tag, base, radius)

    def test_removable_flag(self, caplog) -> None:
        """Residues below 1e-15 are kept but flagged."""
        with patch("digit_dirichlet.poles.catalog.riemann_zeta", return_value=0j):
            with caplog.at_level(logging.WARNING):
                poles = enumerate_poles("Zb", 2, 10)
        assert poles and all(p.flag == REMOVABLE_FLAG for p in poles)
        assert "removable?" in caplog.text


class TestBetaPoles:
    """Tests for the β catalogs."""

    def test_gbeta(self, small_trunc) -> None:
        """G_β has a double pole at 2 and simple poles c_β(m) at 2 + iτm."""
        poles = enumerate_poles("Gbeta", 2.5, 10, small_trunc)
        assert [p.m for p in poles] == [0, -1, 1]
        top = poles[0]
        assert top.order == 2
        assert top.laurent_minus2 == pytest.approx(BetaParam(2.5).leading)
        assert top.laurent_minus1 == pytest.approx(constant_coefficient(2.5))
        coefficients = delange_coefficients(2.5, small_trunc)
        assert poles[2].residue == pytest.approx(coefficients[64 + 1])

    def test_fbeta(self, small_trunc) -> None:
        """F_β residues are (1 + iτm) c_β(m)."""
        p = BetaParam(2.5)
        poles = enumerate_poles("Fbeta", 2.5, 10, small_trunc)
        coefficients = delange_coefficients(2.5, small_trunc)
        pole = next(d for d in poles if d.m == 1)
        assert pole.location == pytest.approx(complex(1.0, p.tau))
        assert pole.residue == pytest.approx((1 + 1j * p.tau) * coefficients[64 + 1])

    def test_cutoff_limits_lines(self, small_trunc) -> None:
        """Only |m| <= K of the truncated model appear."""
        poles = enumerate_poles("Gbeta", 1.5, 5000, small_trunc)
        assert max(abs(p.m) for p in poles) == 64

    def test_beta_too_small(self) -> None:
        """β must exceed 1."""
        with pytest.raises(InvalidInput):
            enumerate_poles("Gbeta", 1.0, 5)

    @pytest.mark.parametrize("tag, beta_tag", [("Fb", "Fbeta"), ("Gb", "Gbeta")])
    def test_integer_beta_matches_integer_base(self, tag: str, beta_tag: str, small_trunc) -> None:
        """At β = 3 the top-line poles and residues coincide with the base-3 catalog."""
        top = {p.m: p for p in enumerate_poles(tag, 3, 8) if p.k == 0}
        interpolated = {p.m: p for p in enumerate_poles(beta_tag, 3.0, 8, small_trunc)}
        assert sorted(interpolated) == sorted(top) == [-1, 0, 1]
        for m, pole in interpolated.items():
            assert pole.location == pytest.approx(top[m].location)
            assert pole.order == top[m].order
            assert pole.residue == pytest.approx(top[m].residue, abs=1e-9)
        assert interpolated[0].laurent_minus2 == pytest.approx(top[0].laurent_minus2, abs=1e-12)


class TestCounts:
    """Tests for pole counting."""

    def test_count_matches_enumeration(self) -> None:
        """count_poles agrees with the catalog length."""
        assert count_poles("Gb", 2, 20) == len(enumerate_poles("Gb", 2, 20))

    def test_quadratic_growth(self) -> None:
        """Doubling the radius multiplies the count by about four."""
        ratios = pole_count_ratios(SeriesTag.FB, 2, [20, 40, 80, 160])
        assert ratios[-1] == pytest.approx(4.0, abs=0.5)

    def test_empty_smallest_disc(self) -> None:
        """Ratios need poles inside the smallest radius."""
        with pytest.raises(InvalidInput):
            pole_count_ratios("Gbeta", 2.5, [1.0, 5.0])


class TestRows:
    """Tests for descriptor_to_row."""

    def test_double_pole_row(self) -> None:
        """Double poles fill the laurent columns."""
        row = descriptor_to_row(enumerate_poles("Fb", 2, 2)[1])
        assert list(row) == ROW_FIELDS
        assert row["order"] == 2 and row["b"] == 2
        assert row["laurent2_re"] == pytest.approx(1 / (2 * math.log(2)))

    def test_simple_pole_row(self) -> None:
        """Simple poles leave the laurent columns empty."""
        row = descriptor_to_row(enumerate_poles("Zb", 2, 2)[0])
        assert row["laurent2_re"] is None and row["laurent1_im"] is None
        assert row["flag"] is None
