"""
Acceptance criteria run by `digit-dirichlet verify`.

Each criterion is a registered object with an index, a name, a group and a
check(tol_scale) method; the registry selects and runs them and keeps the
output in index order.
"""

import logging
import math
import tempfile
import time
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np

from digit_dirichlet.config import settings
from digit_dirichlet.delange.coefficients import as_beta, constant_coefficient, delange_coefficients
from digit_dirichlet.delange.grids import figure_grids, write_grid
from digit_dirichlet.delange.interpolation import h_beta, s_beta
from digit_dirichlet.digits.cumulative import cumulative_digit_sums, digit_sum_array
from digit_dirichlet.errors import DigitDirichletError, PoleAt
from digit_dirichlet.numerics.contour import laurent_coefficients
from digit_dirichlet.numerics.dirichlet import direct_dirichlet_sum, log_envelope_tail
from digit_dirichlet.numerics.results import ContourSpec
from digit_dirichlet.poles.catalog import enumerate_poles, pole_count_ratios
from digit_dirichlet.poles.certify import residue_check
from digit_dirichlet.precision_config import FourierTruncation
from digit_dirichlet.series.beta import f_beta_eval, g_beta_eval
from digit_dirichlet.series.integer_base import fb_eval, gb_eval, zb_eval, zb_laurent_at_zero
from digit_dirichlet.series.lattice import SeriesTag, default_bernoulli_K, vertical_spacing
from digit_dirichlet.series.sbeta_table import build_sbeta_table

logger = logging.getLogger(__name__)


class CriterionStatus(Enum):
    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"


@dataclass
class CriterionResult:
    """Verdict of one criterion with the values it measured."""

    status: CriterionStatus
    measured: dict[str, Any] = field(default_factory=dict)
    error: str | None = None
    runtime_s: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == CriterionStatus.PASSED

    @classmethod
    def judge(cls, passed: bool, **measured: Any) -> "CriterionResult":
        """PASSED or FAILED depending on the check."""
        return cls(CriterionStatus.PASSED if passed else CriterionStatus.FAILED, measured)

    @classmethod
    def fail(cls, error: str, **measured: Any) -> "CriterionResult":
        """A criterion that could not be evaluated."""
        return cls(CriterionStatus.ERROR, measured, error)


class BaseCriterion(ABC):
    """Base class for acceptance criteria."""

    @property
    @abstractmethod
    def index(self) -> int:
        """Position in the report."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Name used by --only."""

    @property
    @abstractmethod
    def group(self) -> str:
        """Group name, also accepted by --only."""

    @property
    @abstractmethod
    def description(self) -> str:
        """One-line statement of what is checked."""

    @abstractmethod
    def check(self, tol_scale: float) -> CriterionResult:
        """Run the check with every threshold multiplied by tol_scale."""

    def __call__(self, tol_scale: float = 1.0) -> CriterionResult:
        start = time.perf_counter()
        try:
            result = self.check(tol_scale)
        except DigitDirichletError as e:
            logger.exception(f"Criterion {self.name} failed: {e}")
            result = CriterionResult.fail(f"{e.kind}: {e}")
        result.runtime_s = time.perf_counter() - start
        return result


def _max_abs(values: list[complex | float]) -> float:
    return max((abs(v) for v in values), default=0.0)


# =============================================================================
# Series evaluators against oracles
# =============================================================================


class ZbClosedForm(BaseCriterion):
    index = 1
    name = "zb_closed_form"
    group = "series"
    description = "zb_eval matches the differenced digit-sum series summed to N = 10^5 within 1e-6"

    N = 100_000

    def check(self, tol_scale: float) -> CriterionResult:
        diffs = {}
        for b in (2, 3, 10):
            coefficients = np.diff(digit_sum_array(b, self.N))
            for s in (2.0, 3.0, 2.0 + 5.0j):
                oracle = direct_dirichlet_sum(
                    coefficients,
                    s,
                    self.N,
                    lambda n, s=s, b=b: log_envelope_tail(n, complex(s).real, b - 1.0, math.log(b)),
                    sigma_a=1.0,
                )
                diffs[f"b={b},s={s}"] = abs(zb_eval(b, s) - oracle.value)
        worst = max(diffs.values())
        return CriterionResult.judge(worst < 1e-6 * tol_scale, max_abs_diff=worst)


class ContinuationMatchesSeries(BaseCriterion):
    index = 2
    name = "continuation_vs_series"
    group = "series"
    description = "fb_eval(b, 2.5) and gb_eval(b, 3.5) match tail-bounded direct sums within 1e-5, b in {2, 3}"

    N = 1_000_000

    def check(self, tol_scale: float) -> CriterionResult:
        worst, within = 0.0, True
        for b in (2, 3):
            digits = digit_sum_array(b, self.N)[1:]
            cumulative = cumulative_digit_sums(b, self.N)[1:]

            def tail(n: int, b: int = b) -> float:
                return log_envelope_tail(n, 2.5, b - 1.0, math.log(b))

            cases = [
                (fb_eval(b, 2.5), direct_dirichlet_sum(digits, 2.5, self.N, tail, sigma_a=1.0)),
                (gb_eval(b, 3.5), direct_dirichlet_sum(cumulative, 3.5, self.N, tail, sigma_a=2.0)),
            ]
            for result, oracle in cases:
                diff = abs(result.value - oracle.value)
                worst = max(worst, diff)
                within &= diff <= result.abs_error_estimate + oracle.abs_error_estimate + 1e-12
        return CriterionResult.judge(within and worst < 1e-5 * tol_scale, max_abs_diff=worst, within_estimates=within)


class BernoulliCutoffIndependence(BaseCriterion):
    index = 3
    name = "k_independence"
    group = "series"
    description = "fb_eval and gb_eval agree to 1e-7 for two admissible Bernoulli cutoffs"

    def check(self, tol_scale: float) -> CriterionResult:
        diffs = {}
        cases = [(SeriesTag.FB, fb_eval, 0.5 + 0.3j), (SeriesTag.FB, fb_eval, -1.5 + 0.2j), (SeriesTag.GB, gb_eval, 1.5 + 0.7j)]
        for b in (2, 3):
            for tag, evaluate, s in cases:
                K = default_bernoulli_K(tag, s)
                diffs[f"{tag.value},b={b},s={s}"] = abs(evaluate(b, s, K=K).value - evaluate(b, s, K=K + 4).value)
        worst = max(diffs.values())
        return CriterionResult.judge(worst < 1e-7 * tol_scale, max_abs_diff=worst)


# =============================================================================
# Residues and Laurent data
# =============================================================================


def _pick(tag: SeriesTag, base: int, radius: float, wanted: list[tuple[int, int]]):
    catalog = {(d.k, d.m): d for d in enumerate_poles(tag, base, radius)}
    return [catalog[key] for key in wanted]


class FbResidues(BaseCriterion):
    index = 4
    name = "fb_residues"
    group = "residues"
    description = "contour residues of fb_eval at 1+2πi/log 2, 0 and -1 match the closed forms to 1e-6"

    def check(self, tol_scale: float) -> CriterionResult:
        poles = _pick(SeriesTag.FB, 2, 9.5, [(0, 1), (1, 0), (2, 0)])
        reports = [residue_check(d, 1e-6 * tol_scale) for d in poles]
        L = math.log(2.0)
        closed = abs(poles[1].residue - 1 / (4 * L)) + abs(poles[2].residue + 1 / (24 * L))
        return CriterionResult.judge(
            all(r.passed for r in reports) and closed < 1e-12,
            max_abs_diff=max(r.abs_diff for r in reports),
            closed_form_residual=closed,
        )


class GbResidues(BaseCriterion):
    index = 5
    name = "gb_residues"
    group = "residues"
    description = "Res(G_b, 1) = (b+1)/12 to 1e-8 and the double pole at 2 to 1e-6, b in {2, 3}"

    def check(self, tol_scale: float) -> CriterionResult:
        measured, passed = {}, True
        for b in (2, 3):
            at_one, at_two = _pick(SeriesTag.GB, b, 2.5, [(1, 0), (0, 0)])
            simple = residue_check(at_one, 1e-8 * tol_scale)
            double = residue_check(at_two, 1e-6 * tol_scale)
            passed &= simple.passed and double.passed and abs(at_one.residue - (b + 1) / 12) < 1e-15
            measured[f"b={b}"] = {"residue_at_1": simple.abs_diff, "double_pole_at_2": double.abs_diff}
        return CriterionResult.judge(passed, **measured)


class ZbLaurentAtZero(BaseCriterion):
    index = 6
    name = "zb_laurent"
    group = "residues"
    description = "contour a_{-1} and a_0 of Z_b at 0 match the closed forms to 1e-9 and 1e-8"

    def check(self, tol_scale: float) -> CriterionResult:
        measured, passed = {}, True
        for b in (2, 3, 10):
            radius = min(0.4 * vertical_spacing(b), 0.5)
            contour = laurent_coefficients(
                lambda s, b=b: zb_eval(b, s), ContourSpec(0j, radius, 64), [1, 0], tolerance=1e-10
            )
            residue, constant = zb_laurent_at_zero(b)
            d1, d0 = abs(contour[1] - residue), abs(contour[0] - constant)
            passed &= d1 < 1e-9 * tol_scale and d0 < 1e-8 * tol_scale
            measured[f"b={b}"] = {"a_minus1": d1, "a_0": d0}
        return CriterionResult.judge(passed, **measured)


# =============================================================================
# Delange engine
# =============================================================================


class DelangeAtIntegerBases(BaseCriterion):
    index = 7
    name = "delange_integer_bases"
    group = "delange"
    description = "max |S_β(n) - S_b(n)|/n < 0.05 at K = 1000 and at least 20% smaller at K = 4000"

    def check(self, tol_scale: float) -> CriterionResult:
        n = np.arange(1, 1001)
        measured, passed = {}, True
        for b in (2, 3, 5, 10):
            exact = cumulative_digit_sums(b, 1000)[1:].astype(float)
            errors = [
                float(np.max(np.abs(s_beta(b, n, FourierTruncation(K)) - exact) / n)) for K in (1000, 4000)
            ]
            passed &= errors[0] < 0.05 * tol_scale and errors[1] <= 0.8 * errors[0]
            measured[f"b={b}"] = {"K=1000": errors[0], "K=4000": errors[1]}
        return CriterionResult.judge(passed, **measured)


class DelangeVanishesAtZero(BaseCriterion):
    index = 8
    name = "h_at_zero"
    group = "delange"
    description = "|h_b(0)| < 0.02 at K = 4000 for b in {2, 3, 10}"

    def check(self, tol_scale: float) -> CriterionResult:
        values = {f"b={b}": abs(h_beta(b, 0.0, FourierTruncation(4000))) for b in (2, 3, 10)}
        return CriterionResult.judge(max(values.values()) < 0.02 * tol_scale, **values)


# =============================================================================
# β-series
# =============================================================================


class GbetaOracle(BaseCriterion):
    index = 9
    name = "gbeta_oracle"
    group = "beta"
    description = "g_beta_eval(2.5, 3) matches the S_β table summed to N = 10^5 within 1e-4"

    N = 100_000
    beta = 2.5
    s = 3.0

    def check(self, tol_scale: float) -> CriterionResult:
        p = as_beta(self.beta)
        table = build_sbeta_table(p, self.N)
        coefficients = delange_coefficients(p, table.truncation)
        K = table.truncation.cutoff_K
        sigma = self.s - 2.0
        N = self.N
        power = N ** (-sigma)
        # Σ_{n>N} of the non-oscillating part a n log n + c_β(0) n
        mean_tail = p.leading * power * (math.log(N) / sigma + 1.0 / sigma**2) + coefficients[K].real * power / sigma
        oscillating = (float(np.sum(np.abs(coefficients))) - abs(coefficients[K])) * power / sigma
        oracle = direct_dirichlet_sum(table.values[1:], self.s, N, lambda n: oscillating, sigma_a=2.0)

        result = g_beta_eval(p, self.s, table.truncation)
        diff = float(abs(result.value - (oracle.value + mean_tail)))
        within = bool(diff <= result.abs_error_estimate + oracle.abs_error_estimate)
        return CriterionResult.judge(
            within and diff < 1e-4 * tol_scale, abs_diff=diff, estimate=result.abs_error_estimate, within_estimates=within
        )


class BetaIntegerCoherence(BaseCriterion):
    index = 10
    name = "beta_integer_coherence"
    group = "beta"
    description = "f_beta_eval(2, 2.5) is within 1e-2 of fb_eval(2, 2.5); the Laurent identity holds to 1e-12"

    def check(self, tol_scale: float) -> CriterionResult:
        diff = abs(f_beta_eval(2.0, 2.5).value - fb_eval(2, 2.5).value)
        identity = 0.0
        for b in (2, 3, 10):
            L = math.log(b)
            lhs = constant_coefficient(float(b)) + (b - 1) / (2 * L)
            rhs = (b - 1) * math.log(2 * math.pi) / (2 * L) - (b + 1) / 4
            identity = max(identity, abs(lhs - rhs))
        return CriterionResult.judge(
            diff < 1e-2 * tol_scale and identity < 1e-12, abs_diff=diff, identity_residual=identity
        )


# =============================================================================
# Poles, grids and symmetry
# =============================================================================


class PoleCountGrowth(BaseCriterion):
    index = 11
    name = "pole_count_growth"
    group = "poles"
    description = "pole counts of F_2 at r = 20, 40, 80 grow by factors in [3.2, 4.8]"

    def check(self, tol_scale: float) -> CriterionResult:
        ratios = pole_count_ratios(SeriesTag.FB, 2, [20.0, 40.0, 80.0])
        return CriterionResult.judge(all(3.2 <= r <= 4.8 for r in ratios), ratios=ratios)


class FigureGrids(BaseCriterion):
    index = 12
    name = "figure_grids"
    group = "grids"
    description = "fig1-3 grids emit finite values at step 0.01, K = 1000; fig1 varies by < 0.5 on [11, 15]"

    def check(self, tol_scale: float) -> CriterionResult:
        grids = figure_grids(step=0.01, trunc=FourierTruncation(1000))
        with tempfile.TemporaryDirectory() as directory:
            for name, rows in grids.items():
                write_grid(rows, Path(directory) / f"{name}_beta_grid.csv")
        finite = all(math.isfinite(row.value) for rows in grids.values() for row in rows)
        plateau = [row.value for row in grids["fig1"] if 11.0 <= row.beta <= 15.0]
        spread = max(plateau) - min(plateau)
        at_two = next(row for row in grids["fig1"] if abs(row.beta - 2.0) < 1e-9)
        s2_error = abs(at_two.value - 15.0)
        return CriterionResult.judge(
            finite and spread < 0.5 * tol_scale and s2_error <= 10 * at_two.tail_bound,
            rows={name: len(rows) for name, rows in grids.items()},
            fig1_spread=spread,
            s2_10_error=s2_error,
        )


class ConjugateSymmetry(BaseCriterion):
    index = 13
    name = "conjugate_symmetry"
    group = "symmetry"
    description = "every evaluator satisfies f(conj s) = conj f(s) to 1e-10 at 100 random points"

    points = 100
    seed = 20240611

    def check(self, tol_scale: float) -> CriterionResult:
        rng = np.random.default_rng(self.seed)
        table = build_sbeta_table(2.5)
        evaluators = [
            ("Zb", lambda s: zb_eval(3, s), (-3.0, 3.0)),
            ("Fb", lambda s: fb_eval(2, s).value, (-2.0, 3.0)),
            ("Gb", lambda s: gb_eval(2, s).value, (-1.0, 4.0)),
            ("Gbeta", lambda s: g_beta_eval(2.5, s).value, (1.2, 4.0)),
            ("Fbeta", lambda s: f_beta_eval(2.5, s, table=table).value, (0.3, 3.0)),
        ]
        worst: dict[str, float] = {}
        skipped = 0
        for i in range(self.points):
            name, evaluate, (lo, hi) = evaluators[i % len(evaluators)]
            s = complex(rng.uniform(lo, hi), rng.uniform(-8.0, 8.0))
            try:
                diff = abs(evaluate(s.conjugate()) - evaluate(s).conjugate())
            except PoleAt:
                skipped += 1
                continue
            worst[name] = max(worst.get(name, 0.0), diff)
        return CriterionResult.judge(_max_abs(list(worst.values())) < 1e-10 * tol_scale, skipped=skipped, **worst)


# =============================================================================
# Registry
# =============================================================================


class CriterionRegistry:
    """Registry of acceptance criteria."""

    def __init__(self) -> None:
        self._criteria: dict[str, BaseCriterion] = {}

    def register(self, criterion: BaseCriterion) -> None:
        if criterion.name in self._criteria:
            logger.warning(f"Overwriting existing criterion: {criterion.name}")
        self._criteria[criterion.name] = criterion
        logger.debug(f"Registered criterion: {criterion.name}")

    def get(self, name: str) -> BaseCriterion | None:
        return self._criteria.get(name)

    def invoke(self, name: str, tol_scale: float = 1.0) -> CriterionResult:
        if name not in self:
            return CriterionResult.fail(f"Unknown criterion: {name}")
        criterion = self._criteria[name]
        logger.info(f"Running criterion {criterion.index}: {name}")
        return criterion(tol_scale)

    def list_criteria(self) -> list[dict[str, Any]]:
        return [
            {"index": c.index, "name": c.name, "group": c.group, "description": c.description}
            for c in self.ordered()
        ]

    def ordered(self) -> list[BaseCriterion]:
        return sorted(self._criteria.values(), key=lambda c: c.index)

    def select(self, only: list[str] | None = None) -> list[BaseCriterion]:
        """
        Criteria matching any of only by name, group or index; all of them when None.

        Raises:
            KeyError: for a selector that matches nothing.
        """
        if not only:
            return self.ordered()
        chosen = []
        for selector in only:
            matches = [c for c in self.ordered() if selector in (c.name, c.group, str(c.index))]
            if not matches:
                raise KeyError(selector)
            chosen.extend(c for c in matches if c not in chosen)
        return sorted(chosen, key=lambda c: c.index)

    def run_all(
        self, only: list[str] | None = None, tol_scale: float = 1.0
    ) -> list[tuple[BaseCriterion, CriterionResult]]:
        """Run the selected criteria (concurrently when threads > 1); results in index order."""
        selected = self.select(only)
        if settings.threads > 1 and len(selected) > 1:
            with ThreadPoolExecutor(max_workers=settings.threads) as pool:
                results = list(pool.map(lambda c: c(tol_scale), selected))
        else:
            results = [c(tol_scale) for c in selected]
        for criterion, result in zip(selected, results):
            logger.info(f"criterion {criterion.index} {criterion.name}: {result.status.value}")
        return list(zip(selected, results))

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.ordered()]

    def __len__(self) -> int:
        return len(self._criteria)

    def __contains__(self, name: str) -> bool:
        return name in self._criteria


def build_registry() -> CriterionRegistry:
    """Registry holding every acceptance criterion."""
    registry = CriterionRegistry()
    for criterion in (
        ZbClosedForm(),
        ContinuationMatchesSeries(),
        BernoulliCutoffIndependence(),
        FbResidues(),
        GbResidues(),
        ZbLaurentAtZero(),
        DelangeAtIntegerBases(),
        DelangeVanishesAtZero(),
        GbetaOracle(),
        BetaIntegerCoherence(),
        PoleCountGrowth(),
        FigureGrids(),
        ConjugateSymmetry(),
    ):
        registry.register(criterion)
    return registry


criterion_registry = build_registry()
