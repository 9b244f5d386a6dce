"""Tests for the figure grids."""

import csv
from unittest.mock import patch

import numpy as np
import pytest

from digit_dirichlet.delange.grids import (
    FIGURE1_N,
    GRID_COLUMNS,
    beta_grid,
    figure_grids,
    write_figure_grids,
)
from digit_dirichlet.delange.interpolation import h_beta, s_beta
from digit_dirichlet.errors import InvalidInput

SHORT_RANGES = {"fig1": (2.0, 4.0), "fig2": (2.0, 3.0), "fig3": (2.0, 3.0)}


@pytest.fixture(autouse=True)
def short_ranges():
    """Keep β well away from 1 so the grids stay cheap."""
    with patch.dict("digit_dirichlet.delange.grids.FIGURE_RANGES", SHORT_RANGES):
        yield


class TestBetaGrid:
    """Tests for beta_grid."""

    def test_inclusive(self) -> None:
        """Both endpoints are included without drift."""
        grid = beta_grid(1.01, 1.05, 0.01)
        np.testing.assert_array_equal(grid, [1.01, 1.02, 1.03, 1.04, 1.05])

    @pytest.mark.parametrize("start, stop, step", [(1.01, 2.0, 0.0), (2.0, 1.5, 0.1)])
    def test_invalid(self, start: float, stop: float, step: float) -> None:
        """Non-positive steps and empty ranges are refused."""
        with pytest.raises(InvalidInput):
            beta_grid(start, stop, step)


class TestFigureGrids:
    """Tests for figure_grids."""

    def test_rows(self, small_trunc) -> None:
        """Each figure gets one row per β of its range."""
        grids = figure_grids(step=0.5, trunc=small_trunc)
        assert [row.beta for row in grids["fig1"]] == [2.0, 2.5, 3.0, 3.5, 4.0]
        assert [row.beta for row in grids["fig2"]] == [2.0, 2.5, 3.0]

    def test_values(self, small_trunc) -> None:
        """Rows hold S_β(10), h_β(2) and h_β(log 2 / log β)."""
        grids = figure_grids(step=0.5, trunc=small_trunc)
        fig1, fig2, fig3 = grids["fig1"][1], grids["fig2"][1], grids["fig3"][1]
        assert fig1.x_or_n == FIGURE1_N
        assert fig1.value == pytest.approx(s_beta(2.5, FIGURE1_N, small_trunc))
        assert fig2.value == pytest.approx(h_beta(2.5, 2.0, small_trunc))
        assert fig3.value == pytest.approx(h_beta(2.5, np.log(2) / np.log(2.5), small_trunc))
        assert fig3.cutoff_K == 64

    def test_subset(self, small_trunc) -> None:
        """Only the requested figures are computed."""
        assert set(figure_grids(step=1.0, trunc=small_trunc, figures=("fig2",))) == {"fig2"}

    def test_unknown_figure(self, small_trunc) -> None:
        """Unknown figure names raise InvalidInput."""
        with pytest.raises(InvalidInput):
            figure_grids(step=1.0, trunc=small_trunc, figures=("fig4",))

    def test_threaded_matches_sequential(self, small_trunc, threaded_settings) -> None:
        """Worker threads do not change the rows or their order."""
        threaded = figure_grids(step=0.5, trunc=small_trunc)
        with patch("digit_dirichlet.config.settings.threads", 1):
            sequential = figure_grids(step=0.5, trunc=small_trunc)
        assert threaded == sequential


class TestWriteFigureGrids:
    """Tests for the CSV output."""

    def test_files(self, tmp_path, small_trunc) -> None:
        """One CSV per figure with the fixed header."""
        paths = write_figure_grids(tmp_path / "out", step=1.0, trunc=small_trunc)
        assert sorted(p.name for p in paths.values()) == [
            "fig1_beta_grid.csv",
            "fig2_beta_grid.csv",
            "fig3_beta_grid.csv",
        ]
        with paths["fig1"].open() as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == GRID_COLUMNS
        assert [r[0] for r in rows[1:]] == ["2.00", "3.00", "4.00"]
        assert rows[1][4] == "64"
