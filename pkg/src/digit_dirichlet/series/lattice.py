"""
Series tags, pole lattices and the default Bernoulli truncation.

With τ = 2π/log b the poles sit on half-lattices:

    Z_b   iτm                                    (all m)
    F_b   1 - k + iτm,  k in {0, 1} or k >= 2 even
    G_b   2 - k + iτm,  k = 0 or k >= 2 even, plus the isolated pole s = 1
"""

import logging
import math
from enum import Enum

from digit_dirichlet.errors import InvalidInput, OutOfDomain, PoleAt
from digit_dirichlet.precision_config import get_numeric_config

logger = logging.getLogger(__name__)


class SeriesTag(Enum):
    """The Dirichlet series handled by the package."""

    ZB = "Zb"
    FB = "Fb"
    GB = "Gb"
    FBETA = "Fbeta"
    GBETA = "Gbeta"

    @property
    def is_beta(self) -> bool:
        return self in (SeriesTag.FBETA, SeriesTag.GBETA)

    @classmethod
    def parse(cls, name: "str | SeriesTag") -> "SeriesTag":
        """Look a tag up by its value, case-insensitively."""
        if isinstance(name, SeriesTag):
            return name
        for tag in cls:
            if tag.value.lower() == str(name).lower():
                return tag
        raise InvalidInput(f"unknown series {name!r}; expected one of {[t.value for t in cls]}")


# (absolute, conditional) abscissas of convergence
_ABSCISSAS = {
    SeriesTag.ZB: (1.0, 0.0),
    SeriesTag.FB: (1.0, 1.0),
    SeriesTag.GB: (2.0, 2.0),
    SeriesTag.FBETA: (1.0, 1.0),
    SeriesTag.GBETA: (2.0, 2.0),
}


def abscissa(tag: SeriesTag) -> tuple[float, float]:
    """(σ_a, σ_c) of the Dirichlet series named by tag."""
    return _ABSCISSAS[SeriesTag.parse(tag)]


def vertical_spacing(base: float) -> float:
    """τ = 2π / log(base), the vertical period of every lattice."""
    return 2.0 * math.pi / math.log(base)


def fb_line_present(k: int) -> bool:
    """Whether F_b has a vertical line of poles at Re(s) = 1 - k."""
    return k in (0, 1) or (k >= 2 and k % 2 == 0)


def gb_line_present(k: int) -> bool:
    """Whether G_b has a vertical line of poles at Re(s) = 2 - k."""
    return k == 0 or (k >= 2 and k % 2 == 0)


def nearest_lattice_point(tag: SeriesTag, base: float, s: complex) -> tuple[int, int, complex]:
    """
    The pole (k, m, location) of tag closest to s, among lines that exist.

    The isolated G_b pole at s = 1 is reported as (k=1, m=0); the beta
    series have a single line, reported with k = 0.
    """
    tag = SeriesTag.parse(tag)
    s = complex(s)
    tau = vertical_spacing(base)
    m = round(s.imag / tau)
    if tag is SeriesTag.ZB:
        return 0, m, complex(0.0, tau * m)

    top = 1 if tag in (SeriesTag.FB, SeriesTag.FBETA) else 2
    present = fb_line_present if tag is SeriesTag.FB else gb_line_present
    if tag.is_beta:
        return 0, m, complex(top, tau * m)

    k_near = top - s.real
    candidates = [
        (k, m, complex(top - k, tau * m))
        for k in range(max(0, math.floor(k_near) - 1), max(0, math.ceil(k_near)) + 2)
        if present(k)
    ]
    if tag is SeriesTag.GB:
        candidates.append((1, 0, 1.0 + 0.0j))
    return min(candidates, key=lambda c: abs(s - c[2]))


def check_not_pole(tag: SeriesTag, base: float, s: complex, guard: float | None = None) -> None:
    """
    Raise PoleAt when s lies within guard of a pole of tag.

    Args:
        tag: Series.
        base: b or β.
        s: Point to test.
        guard: Guard radius; config.yaml's pole_guard when None.
    """
    guard = get_numeric_config().series.pole_guard if guard is None else guard
    nearest = nearest_lattice_point(tag, base, complex(s))
    if abs(complex(s) - nearest[2]) < guard:
        k, m, location = nearest
        raise PoleAt(location, f"{SeriesTag.parse(tag).value} has a pole at {location} (k={k}, m={m})")


def default_bernoulli_K(tag: SeriesTag, s: complex) -> int:
    """
    Default truncation K for the Bernoulli expansions.

    K = max(4, ceil(1 - Re s) + 4) for F_b, one more for G_b, rounded up to
    an even number.

    Raises:
        OutOfDomain: if the rule asks for more than max_bernoulli_K terms.
    """
    tag = SeriesTag.parse(tag)
    shift = {SeriesTag.FB: 1.0, SeriesTag.GB: 2.0}.get(tag)
    if shift is None:
        raise InvalidInput(f"no Bernoulli expansion for {tag.value}")
    K = max(4, math.ceil(shift - complex(s).real) + 4)
    K += K % 2
    limit = get_numeric_config().series.max_bernoulli_K
    if K > limit:
        raise OutOfDomain(f"Re(s) = {complex(s).real} needs K = {K} > {limit} Bernoulli terms")
    return K
