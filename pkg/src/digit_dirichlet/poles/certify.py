"""
Numerical certification of catalog residues.

Each closed-form residue is compared with the a_{-1} (and a_{-2} for
double poles) that the trapezoid rule extracts from the evaluators on a
circle around the pole.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from digit_dirichlet.errors import InvalidInput
from digit_dirichlet.numerics.contour import laurent_coefficients
from digit_dirichlet.numerics.results import ContourSpec, complex_to_dict
from digit_dirichlet.poles.catalog import PoleDescriptor, descriptor_to_row, enumerate_poles, lattice_points
from digit_dirichlet.precision_config import get_numeric_config
from digit_dirichlet.series.beta import FBETA_DOMAIN, GBETA_DOMAIN, f_beta_eval, g_beta_eval
from digit_dirichlet.series.integer_base import fb_eval, gb_eval, zb_eval
from digit_dirichlet.series.lattice import SeriesTag, vertical_spacing
from digit_dirichlet.series.sbeta_table import SbetaTable, build_sbeta_table

logger = logging.getLogger(__name__)

RADIUS_FRACTION = 0.4
DOMAIN_FRACTION = 0.8


@dataclass
class ResidueReport:
    """Formula against contour for one pole; double poles also compare a_{-2}."""

    descriptor: PoleDescriptor
    formula_value: complex
    contour_value: complex
    abs_diff: float
    tol: float
    contour_radius: float
    laurent2_formula: complex | None = None
    laurent2_contour: complex | None = None

    @property
    def passed(self) -> bool:
        return self.abs_diff < self.tol

    def to_dict(self) -> dict[str, Any]:
        data = {
            "pole": descriptor_to_row(self.descriptor),
            "formula_value": complex_to_dict(self.formula_value),
            "contour_value": complex_to_dict(self.contour_value),
            "abs_diff": self.abs_diff,
            "tol": self.tol,
            "contour_radius": self.contour_radius,
            "passed": self.passed,
        }
        if self.laurent2_formula is not None:
            data["laurent2_formula"] = complex_to_dict(self.laurent2_formula)
            data["laurent2_contour"] = complex_to_dict(self.laurent2_contour)
        return data


def evaluator_for(tag: SeriesTag, base: float, table: SbetaTable | None = None) -> Callable[[complex], complex]:
    """The point evaluator of tag as a plain complex function."""
    tag = SeriesTag.parse(tag)
    if tag is SeriesTag.ZB:
        return lambda s: zb_eval(int(base), s)
    if tag is SeriesTag.FB:
        return lambda s: fb_eval(int(base), s).value
    if tag is SeriesTag.GB:
        return lambda s: gb_eval(int(base), s).value
    if tag is SeriesTag.GBETA:
        return lambda s: g_beta_eval(base, s).value
    table = table or build_sbeta_table(base)
    return lambda s: f_beta_eval(base, s, table=table).value


def contour_radius(descriptor: PoleDescriptor) -> float:
    """
    0.4 times the distance to the nearest other pole, shrunk so the circle
    stays inside the β evaluators' half-planes.
    """
    tag = descriptor.tag
    center = descriptor.location
    reach = abs(center) + max(vertical_spacing(descriptor.base), 2.0) + 1.0
    cutoff = abs(descriptor.m) + 1 if tag.is_beta else 0
    others = [
        abs(loc - center)
        for _, _, loc in lattice_points(tag, descriptor.base, reach, cutoff)
        if abs(loc - center) > 1e-12
    ]
    radius = RADIUS_FRACTION * min(others) if others else 0.5
    if tag is SeriesTag.GBETA:
        radius = min(radius, DOMAIN_FRACTION * (center.real - GBETA_DOMAIN))
    elif tag is SeriesTag.FBETA:
        radius = min(radius, DOMAIN_FRACTION * (center.real - FBETA_DOMAIN))
    return radius


def residue_check(
    descriptor: PoleDescriptor,
    tol: float = 1e-6,
    node_count: int = 64,
    table: SbetaTable | None = None,
    radius: float | None = None,
) -> ResidueReport:
    """
    Certify one catalog entry by contour integration.

    Args:
        descriptor: Pole from enumerate_poles.
        tol: Pass threshold on |formula - contour|.
        node_count: Base trapezoid node count (doubled once as a check).
        table: S_β table for F_β poles; built when None.
        radius: Circle radius; contour_radius(descriptor) when None.

    Returns:
        ResidueReport; passed iff abs_diff < tol.

    Raises:
        InvalidInput: for tol <= 0 or a non-positive radius.
        DigitDirichletError: whatever the evaluator raises on the circle.
    """
    if not tol > 0:
        raise InvalidInput(f"tol must be positive, got {tol}")
    if radius is None:
        radius = contour_radius(descriptor)
    elif not radius > 0:
        raise InvalidInput(f"radius must be positive, got {radius}")
    spec = ContourSpec(descriptor.location, radius, node_count)
    f = evaluator_for(descriptor.tag, descriptor.base, table)
    double = descriptor.order == 2
    orders = [1, 2] if double else [1]
    contour = laurent_coefficients(f, spec, orders, tolerance=tol / 2)

    diff = abs(contour[1] - descriptor.residue)
    if double:
        diff = max(diff, abs(contour[2] - descriptor.laurent_minus2))
    report = ResidueReport(
        descriptor=descriptor,
        formula_value=descriptor.residue,
        contour_value=contour[1],
        abs_diff=diff,
        tol=tol,
        contour_radius=radius,
        laurent2_formula=descriptor.laurent_minus2 if double else None,
        laurent2_contour=contour[2] if double else None,
    )
    verdict = "passed" if report.passed else "FAILED"
    logger.info(f"{descriptor.tag.value} pole at {descriptor.location}: |diff| = {diff:.2e} ({verdict})")
    return report


def certify_poles(
    tag: SeriesTag | str,
    base: float,
    radius: float,
    tol: float = 1e-6,
    max_abs_m: int | None = None,
) -> list[ResidueReport]:
    """
    residue_check for every catalog pole inside radius, in catalog order.

    Args:
        tag: Series.
        base: b or β.
        radius: Catalog radius.
        tol: Pass threshold.
        max_abs_m: Skip poles with |m| above this.
    """
    tag = SeriesTag.parse(tag)
    descriptors = [
        d for d in enumerate_poles(tag, base, radius) if max_abs_m is None or abs(d.m) <= max_abs_m
    ]
    table = None
    if tag is SeriesTag.FBETA and descriptors:
        table = build_sbeta_table(descriptors[0].base, trunc=get_numeric_config().truncation)
    return [residue_check(d, tol, table=table) for d in descriptors]
