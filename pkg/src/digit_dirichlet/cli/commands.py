"""
Subcommand implementations.

Each cmd_* takes a validated CommandConfig and returns a payload; main.py
serializes it and maps errors to exit codes.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from digit_dirichlet.cli.criteria import criterion_registry
from digit_dirichlet.cli.schemas import (
    CommandConfig,
    ComplexValue,
    CriterionReport,
    DelangeQuantity,
    EvalOutput,
    PoleRow,
    VerifyReport,
)
from digit_dirichlet.delange.coefficients import (
    ENVELOPE_EXPONENT,
    ENVELOPE_FIT_UPTO,
    delange_coefficients,
    fitted_envelope,
)
from digit_dirichlet.delange.grids import write_figure_grids
from digit_dirichlet.delange.interpolation import d_beta, h_beta, h_beta_tail_bound, s_beta_with_bound
from digit_dirichlet.errors import InvalidInput
from digit_dirichlet.numerics.results import EvalResult
from digit_dirichlet.poles.catalog import descriptor_to_row, enumerate_poles
from digit_dirichlet.poles.certify import certify_poles
from digit_dirichlet.precision_config import FourierTruncation, get_numeric_config
from digit_dirichlet.series.beta import f_beta_eval, g_beta_eval
from digit_dirichlet.series.integer_base import fb_eval, gb_eval, zb_eval_with_error
from digit_dirichlet.series.lattice import SeriesTag
from digit_dirichlet.series.sbeta_table import build_sbeta_table

logger = logging.getLogger(__name__)


@dataclass
class Table:
    """Tabular payload: JSON as {"meta", "rows"}, CSV as header plus rows."""

    columns: list[str]
    rows: list[dict[str, Any]]
    meta: dict[str, Any] = field(default_factory=dict)
    passed: bool = True

    def to_dict(self) -> dict[str, Any]:
        return {**self.meta, "rows": self.rows}


def _truncation(config: CommandConfig) -> FourierTruncation:
    if config.fourier_cutoff is None:
        return get_numeric_config().truncation
    return FourierTruncation(config.fourier_cutoff)


def cmd_eval(config: CommandConfig) -> EvalOutput:
    """Evaluate the chosen series at one point."""
    tag, s = config.function, config.s
    if tag is SeriesTag.ZB:
        result = zb_eval_with_error(config.integer_base, s)
    elif tag is SeriesTag.FB:
        result = fb_eval(config.integer_base, s, K=config.bernoulli_K, tol=config.tol)
    elif tag is SeriesTag.GB:
        result = gb_eval(config.integer_base, s, K=config.bernoulli_K, tol=config.tol)
    elif tag is SeriesTag.GBETA:
        result = g_beta_eval(config.base_or_beta, s, _truncation(config))
    else:
        table = build_sbeta_table(config.base_or_beta, trunc=_truncation(config))
        result = f_beta_eval(config.base_or_beta, s, table=table, tol=config.tol)
    return _eval_output(config, result)


def _eval_output(config: CommandConfig, result: EvalResult) -> EvalOutput:
    parameters = dict(result.parameters)
    if result.quadrature is not None:
        parameters["quadrature"] = result.quadrature.to_dict()
    return EvalOutput(
        function=config.function.value,
        base=config.base_or_beta,
        s=ComplexValue.of(config.s),
        value=ComplexValue.of(result.value),
        abs_error_estimate=result.abs_error_estimate,
        K_used=result.K_used,
        parameters=parameters,
    )


def cmd_poles(config: CommandConfig) -> Table:
    """Pole catalog inside the radius, sorted by |location| then m."""
    descriptors = enumerate_poles(config.function, config.base_or_beta, config.radius, _truncation(config))
    rows = [PoleRow(**descriptor_to_row(d)).model_dump() for d in descriptors]
    meta = {"function": config.function.value, "base": config.base_or_beta, "radius": config.radius}
    return Table(list(PoleRow.model_fields), rows, meta)


def cmd_certify(config: CommandConfig) -> Table:
    """Contour certification of every catalog pole inside the radius."""
    tol = config.tol if config.tol is not None else 1e-6
    reports = certify_poles(config.function, config.base_or_beta, config.radius, tol, config.max_abs_m)
    rows = []
    for report in reports:
        row = descriptor_to_row(report.descriptor)
        rows.append(
            {
                "tag": row["tag"],
                "b": row["b"],
                "k": row["k"],
                "m": row["m"],
                "re": row["re"],
                "im": row["im"],
                "formula_re": report.formula_value.real,
                "formula_im": report.formula_value.imag,
                "contour_re": report.contour_value.real,
                "contour_im": report.contour_value.imag,
                "abs_diff": report.abs_diff,
                "passed": report.passed,
            }
        )
    passed = all(r.passed for r in reports)
    meta = {"function": config.function.value, "base": config.base_or_beta, "tol": tol, "passed": passed}
    columns = list(rows[0]) if rows else ["tag", "b", "k", "m", "abs_diff", "passed"]
    return Table(columns, rows, meta, passed)


def cmd_delange(config: CommandConfig) -> Table:
    """c_β(k), h_β(x), S_β(n) or d_β(n) at the requested points."""
    beta, trunc = config.base_or_beta, _truncation(config)
    quantity = config.quantity
    points = config.points
    if quantity is not DelangeQuantity.H and any(not float(p).is_integer() for p in points):
        raise InvalidInput(f"{quantity.value} needs integer points, got {points}")
    meta: dict[str, Any] = {"quantity": quantity.value, "beta": beta, "cutoff_K": trunc.cutoff_K}

    if quantity is DelangeQuantity.COEFFICIENT:
        coefficients = delange_coefficients(beta, trunc)
        K = trunc.cutoff_K
        rows = []
        for p in points:
            k = int(p)
            if abs(k) > K:
                raise InvalidInput(f"|k| = {abs(k)} exceeds the cutoff {K}")
            c = complex(coefficients[K + k])
            rows.append({"beta": beta, "k": k, "re": c.real, "im": c.imag})
        if K >= ENVELOPE_FIT_UPTO:
            meta["envelope_C"] = fitted_envelope(coefficients)
            meta["envelope_exponent"] = ENVELOPE_EXPONENT
    elif quantity is DelangeQuantity.H:
        values = h_beta(beta, np.array(points, dtype=float), trunc)
        bound = h_beta_tail_bound(beta, trunc)
        rows = [{"beta": beta, "x": x, "value": float(v), "tail_bound": bound} for x, v in zip(points, values)]
    elif quantity is DelangeQuantity.S:
        n = np.array(points, dtype=np.int64)
        values, bounds = s_beta_with_bound(beta, n, trunc)
        rows = [
            {"beta": beta, "n": int(k), "value": float(v), "tail_bound": float(e)}
            for k, v, e in zip(n, values, bounds)
        ]
    else:
        n = np.array(points, dtype=np.int64)
        values = d_beta(beta, n, trunc)
        rows = [{"beta": beta, "n": int(k), "value": float(v)} for k, v in zip(n, values)]

    return Table(list(rows[0]), rows, meta)


def cmd_plot(config: CommandConfig) -> dict[str, str]:
    """Write fig{1,2,3}_beta_grid.csv; returns figure name -> path."""
    paths = write_figure_grids(
        output_dir=Path(config.output_dir) if config.output_dir else None,
        step=config.grid_step,
        trunc=_truncation(config),
        figures=tuple(config.figures),
    )
    return {name: str(path) for name, path in paths.items()}


def cmd_verify(config: CommandConfig) -> VerifyReport:
    """Run the acceptance criteria; the report lists them in index order."""
    try:
        results = criterion_registry.run_all(config.only, config.tol_scale)
    except KeyError as e:
        raise InvalidInput(f"no criterion named {e.args[0]!r}; known: {criterion_registry.names}") from e
    reports = [
        CriterionReport(
            index=criterion.index,
            name=criterion.name,
            description=criterion.description,
            passed=result.passed,
            measured=result.measured,
            error=result.error,
            runtime_s=result.runtime_s,
        )
        for criterion, result in results
    ]
    return VerifyReport(passed=all(r.passed for r in reports), tol_scale=config.tol_scale, criteria=reports)
