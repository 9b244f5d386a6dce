"""
β-grids behind the three Delange figures.

    fig1  S_β(10)              for β in [1.01, 15]
    fig2  h_β(2)               for β in [1.01, 8]
    fig3  h_β(log 2 / log β)   for β in [1.01, 8]

Each β needs its coefficient vector once; all three figures read from it.
"""

import csv
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from digit_dirichlet.config import settings
from digit_dirichlet.delange.coefficients import BetaParam, delange_coefficients, tail_bound
from digit_dirichlet.delange.interpolation import fourier_sum
from digit_dirichlet.errors import InvalidInput
from digit_dirichlet.precision_config import FourierTruncation, get_numeric_config

logger = logging.getLogger(__name__)

GRID_COLUMNS = ["beta", "x_or_n", "value", "tail_bound", "cutoff_K"]
FIGURE_RANGES = {"fig1": (1.01, 15.0), "fig2": (1.01, 8.0), "fig3": (1.01, 8.0)}
FIGURE1_N = 10


@dataclass(frozen=True)
class GridRow:
    """One CSV row of a figure grid."""

    beta: float
    x_or_n: float
    value: float
    tail_bound: float
    cutoff_K: int

    def as_list(self) -> list:
        return [f"{self.beta:.2f}", repr(self.x_or_n), repr(self.value), repr(self.tail_bound), self.cutoff_K]


def beta_grid(start: float, stop: float, step: float) -> np.ndarray:
    """Inclusive grid start, start + step, ..., stop (rounded to kill drift)."""
    if not step > 0:
        raise InvalidInput(f"grid step must be positive, got {step}")
    if stop < start:
        raise InvalidInput(f"empty grid [{start}, {stop}]")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return np.round(start + step * np.arange(count), 10)


def _rows_for_beta(beta: float, trunc: FourierTruncation, figures: tuple[str, ...]) -> dict[str, GridRow]:
    p = BetaParam(beta)
    coefficients = delange_coefficients(p, trunc)
    bound = tail_bound(coefficients)
    K = trunc.cutoff_K
    rows = {}
    if "fig1" in figures:
        n = FIGURE1_N
        value = p.leading * n * math.log(n) + n * float(fourier_sum(coefficients, np.log(n) / p.log))
        rows["fig1"] = GridRow(beta, n, value, n * bound, K)
    if "fig2" in figures:
        rows["fig2"] = GridRow(beta, 2.0, float(fourier_sum(coefficients, np.float64(2.0))), bound, K)
    if "fig3" in figures:
        x = math.log(2.0) / p.log
        rows["fig3"] = GridRow(beta, x, float(fourier_sum(coefficients, np.float64(x))), bound, K)
    return rows


def figure_grids(
    step: float | None = None,
    trunc: FourierTruncation | None = None,
    figures: tuple[str, ...] = ("fig1", "fig2", "fig3"),
) -> dict[str, list[GridRow]]:
    """
    Compute the figure grids.

    Args:
        step: β step; config.yaml's grid_step when None.
        trunc: Fourier cutoff; the configured default when None.
        figures: Which of fig1, fig2, fig3 to compute.

    Returns:
        Mapping figure name -> rows in increasing β.
    """
    unknown = set(figures) - set(FIGURE_RANGES)
    if unknown:
        raise InvalidInput(f"unknown figures {sorted(unknown)}")
    config = get_numeric_config()
    step = config.delange.grid_step if step is None else step
    trunc = trunc or config.truncation

    per_figure = {name: set(beta_grid(*FIGURE_RANGES[name], step)) for name in figures}
    betas = sorted(set().union(*per_figure.values()))
    wanted = [tuple(name for name in figures if beta in per_figure[name]) for beta in betas]

    def work(item: tuple[float, tuple[str, ...]]) -> dict[str, GridRow]:
        return _rows_for_beta(item[0], trunc, item[1])

    if settings.threads > 1:
        with ThreadPoolExecutor(max_workers=settings.threads) as pool:
            results = list(pool.map(work, zip(betas, wanted)))
    else:
        results = [work(item) for item in zip(betas, wanted)]

    grids: dict[str, list[GridRow]] = {name: [] for name in figures}
    for rows in results:
        for name, row in rows.items():
            grids[name].append(row)
    logger.info(f"computed {len(betas)} beta values for {', '.join(figures)} with K={trunc.cutoff_K}")
    return grids


def write_grid(rows: list[GridRow], path: Path) -> Path:
    """Write rows as CSV with the GRID_COLUMNS header."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(GRID_COLUMNS)
        writer.writerows(row.as_list() for row in rows)
    logger.info(f"wrote {len(rows)} rows to {path}")
    return path


def write_figure_grids(
    output_dir: Path | str | None = None,
    step: float | None = None,
    trunc: FourierTruncation | None = None,
    figures: tuple[str, ...] = ("fig1", "fig2", "fig3"),
) -> dict[str, Path]:
    """Compute the grids and write fig{1,2,3}_beta_grid.csv into output_dir."""
    directory = Path(output_dir if output_dir is not None else settings.output_dir)
    grids = figure_grids(step, trunc, figures)
    return {name: write_grid(rows, directory / f"{name}_beta_grid.csv") for name, rows in grids.items()}
