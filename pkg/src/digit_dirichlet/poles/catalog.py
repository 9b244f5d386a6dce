"""
Closed-form pole catalog for Z_b, F_b, G_b, F_β and G_β.

Every pole sits on a half-lattice σ0 - k + iτm (τ = 2π/log b); the
residues come from the Bernoulli expansion of each series and are
evaluated with the package's own ζ. Double poles also carry a_{-2}.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any

from digit_dirichlet.delange.coefficients import as_beta, delange_coefficients
from digit_dirichlet.digits.expansion import as_base
from digit_dirichlet.errors import InvalidInput
from digit_dirichlet.precision_config import FourierTruncation, get_numeric_config
from digit_dirichlet.series.beta import fbeta_laurent_at_one, gbeta_laurent_at_two
from digit_dirichlet.series.integer_base import zb_factor_residue
from digit_dirichlet.series.lattice import SeriesTag, fb_line_present, gb_line_present, vertical_spacing
from digit_dirichlet.special.bernoulli import bernoulli_number
from digit_dirichlet.special.zeta import riemann_zeta

logger = logging.getLogger(__name__)

REMOVABLE_THRESHOLD = 1e-15
REMOVABLE_FLAG = "removable?"

ROW_FIELDS = [
    "tag",
    "b",
    "k",
    "m",
    "re",
    "im",
    "order",
    "residue_re",
    "residue_im",
    "laurent2_re",
    "laurent2_im",
    "laurent1_re",
    "laurent1_im",
    "flag",
]


@dataclass(frozen=True)
class PoleDescriptor:
    """
    One pole of a series.

    For the β tags there is a single vertical line; k is 0 and m is the
    Fourier index of c_β(m).
    """

    tag: SeriesTag
    base: float
    k: int
    m: int
    location: complex
    order: int
    residue: complex
    laurent_minus2: complex | None = None
    flag: str | None = None

    @property
    def laurent_minus1(self) -> complex:
        return self.residue


def _check_radius(radius: float) -> float:
    radius = float(radius)
    if not radius > 0.0 or not math.isfinite(radius):
        raise InvalidInput(f"radius must be a positive finite number, got {radius}")
    return radius


def _resolve_base(tag: SeriesTag, base: float) -> float:
    if tag.is_beta:
        return as_beta(base).beta
    if isinstance(base, float) and base.is_integer():
        base = int(base)
    return float(as_base(base))


def lattice_points(
    tag: SeriesTag,
    base: float,
    radius: float,
    cutoff: int,
) -> list[tuple[int, int, complex]]:
    """(k, m, location) of every pole with |location| < radius."""
    tau = vertical_spacing(base)
    m_max = int(radius / tau)
    if tag.is_beta:
        m_max = min(m_max, cutoff)
    ms = range(-m_max, m_max + 1)

    if tag is SeriesTag.ZB:
        lines = [(0, 0.0)]
    elif tag is SeriesTag.FBETA:
        lines = [(0, 1.0)]
    elif tag is SeriesTag.GBETA:
        lines = [(0, 2.0)]
    else:
        top, present = (1, fb_line_present) if tag is SeriesTag.FB else (2, gb_line_present)
        lines = [(k, float(top - k)) for k in range(0, top + math.ceil(radius) + 1) if present(k)]

    points = [(k, m, complex(x, tau * m)) for k, x in lines for m in ms]
    if tag is SeriesTag.GB:
        points.append((1, 0, 1.0 + 0.0j))
    return [p for p in points if abs(p[2]) < radius]


def _falling_product(w: complex, count: int) -> complex:
    """Π_{j=1}^{count} (w - j)."""
    product = 1.0 + 0.0j
    for j in range(1, count + 1):
        product *= w - j
    return product


class _ResidueFormulas:
    """Closed-form residues for one (tag, base), sharing ζ on the imaginary axis."""

    def __init__(self, tag: SeriesTag, base: float, cutoff: int) -> None:
        self.tag = tag
        self.base = base
        self.tau = vertical_spacing(base)
        self.log_base = math.log(base)
        self._zeta: dict[int, complex] = {}
        self._coefficients = delange_coefficients(base, FourierTruncation(cutoff)) if tag.is_beta else None
        self._cutoff = cutoff

    def zeta_on_axis(self, m: int) -> complex:
        if m not in self._zeta:
            self._zeta[m] = riemann_zeta(1j * self.tau * m)
        return self._zeta[m]

    def double_pole(self) -> tuple[complex, complex]:
        """(a_{-2}, a_{-1}) of the double pole at the top of the lattice."""
        b, L = self.base, self.log_base
        if self.tag is SeriesTag.FB:
            return (b - 1) / (2 * L), (b - 1) * math.log(2 * math.pi) / (2 * L) - (b + 1) / 4
        if self.tag is SeriesTag.GB:
            return (b - 1) / (2 * L), (b - 1) * (math.log(2 * math.pi) - 1) / (2 * L) - (b + 1) / 4
        if self.tag is SeriesTag.FBETA:
            return fbeta_laurent_at_one(b)
        return gbeta_laurent_at_two(b)

    def residue(self, k: int, m: int) -> complex:
        b = self.base
        w = 1j * self.tau * m
        if self.tag is SeriesTag.ZB:
            return zb_factor_residue(int(b)) * self.zeta_on_axis(m)
        if self.tag.is_beta:
            c = complex(self._coefficients[self._cutoff + m])
            return (1.0 + w) * c if self.tag is SeriesTag.FBETA else c
        scale = (b - 1) / self.log_base
        if self.tag is SeriesTag.FB:
            if k == 0:
                return -(b - 1) / (2j * math.pi * m) * self.zeta_on_axis(m)
            ratio = float(bernoulli_number(k) / math.factorial(k))
            sign = -1.0 if k % 2 == 0 else 1.0
            return sign * scale * self.zeta_on_axis(m) * ratio * _falling_product(w, k - 1)
        if k == 1:
            return complex((b + 1) / 12)
        if k == 0:
            return -(b - 1) / (2j * math.pi * m) / (1.0 + w) * self.zeta_on_axis(m)
        ratio = float(bernoulli_number(k) / (k * math.factorial(k - 2)))
        return scale * self.zeta_on_axis(m) * ratio * _falling_product(w, k - 2)


def _describe(formulas: _ResidueFormulas, k: int, m: int, location: complex) -> PoleDescriptor:
    tag = formulas.tag
    if tag is not SeriesTag.ZB and k == 0 and m == 0:
        minus2, minus1 = formulas.double_pole()
        return PoleDescriptor(tag, formulas.base, k, m, location, 2, complex(minus1), complex(minus2))

    residue = complex(formulas.residue(k, m))
    flag = None
    if abs(residue) < REMOVABLE_THRESHOLD:
        flag = REMOVABLE_FLAG
        logger.warning(f"{tag.value} residue at {location} is {abs(residue):.1e}; flagged as removable?")
    return PoleDescriptor(tag, formulas.base, k, m, location, 1, residue, None, flag)


def enumerate_poles(
    tag: SeriesTag | str,
    base: float,
    radius: float,
    trunc: FourierTruncation | None = None,
) -> list[PoleDescriptor]:
    """
    Every pole with |location| < radius, with its closed-form residue.

    Args:
        tag: Series (Zb, Fb, Gb, Fbeta or Gbeta).
        base: Integer b >= 2, or real β > 1 for the β tags.
        radius: Disc radius (> 0).
        trunc: Fourier cutoff of the β models; the configured default when None.

    Returns:
        Descriptors sorted by |location|, then m.

    Raises:
        InvalidInput: for a bad base or radius.
    """
    tag = SeriesTag.parse(tag)
    base = _resolve_base(tag, base)
    radius = _check_radius(radius)
    cutoff = (trunc or get_numeric_config().truncation).cutoff_K
    formulas = _ResidueFormulas(tag, base, cutoff)
    descriptors = [_describe(formulas, k, m, loc) for k, m, loc in lattice_points(tag, base, radius, cutoff)]
    descriptors.sort(key=lambda d: (round(abs(d.location), 12), d.m, -d.location.real))
    logger.debug(f"{len(descriptors)} poles of {tag.value} (base {base:g}) within radius {radius:g}")
    return descriptors


def count_poles(tag: SeriesTag | str, base: float, radius: float, trunc: FourierTruncation | None = None) -> int:
    """Number of poles with |location| < radius, a double pole counted once."""
    tag = SeriesTag.parse(tag)
    base = _resolve_base(tag, base)
    cutoff = (trunc or get_numeric_config().truncation).cutoff_K
    return len(lattice_points(tag, base, _check_radius(radius), cutoff))


def pole_count_ratios(tag: SeriesTag | str, base: float, radii: list[float]) -> list[float]:
    """count(radii[i+1]) / count(radii[i]); ratios near 4 under radius doubling show r^2 growth."""
    counts = [count_poles(tag, base, r) for r in radii]
    if 0 in counts[:-1]:
        raise InvalidInput(f"no poles inside the smallest radius {radii[0]}")
    return [after / before for before, after in zip(counts, counts[1:])]


def descriptor_to_row(descriptor: PoleDescriptor) -> dict[str, Any]:
    """Flat JSON/CSV row; the laurent columns are None for simple poles."""
    double = descriptor.order == 2
    base = descriptor.base
    return {
        "tag": descriptor.tag.value,
        "b": int(base) if not descriptor.tag.is_beta else base,
        "k": descriptor.k,
        "m": descriptor.m,
        "re": descriptor.location.real,
        "im": descriptor.location.imag,
        "order": descriptor.order,
        "residue_re": descriptor.residue.real,
        "residue_im": descriptor.residue.imag,
        "laurent2_re": descriptor.laurent_minus2.real if double else None,
        "laurent2_im": descriptor.laurent_minus2.imag if double else None,
        "laurent1_re": descriptor.laurent_minus1.real if double else None,
        "laurent1_im": descriptor.laurent_minus1.imag if double else None,
        "flag": descriptor.flag,
    }
