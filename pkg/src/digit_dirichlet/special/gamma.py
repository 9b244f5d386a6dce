"""Complex gamma function and the finite gamma ratios used by the Bernoulli expansions."""

import logging
import math

from scipy import special as sp

from digit_dirichlet.errors import InvalidInput, PoleAt

logger = logging.getLogger(__name__)


def _is_gamma_pole(s: complex) -> bool:
    return s.imag == 0.0 and s.real <= 0.0 and s.real == math.floor(s.real)


def complex_gamma(s: complex) -> complex:
    """
    Evaluate Γ(s) for complex s.

    Args:
        s: Argument, not a nonpositive integer.

    Returns:
        Γ(s) to near machine relative precision for |s| <= 100.

    Raises:
        PoleAt: if s is 0, -1, -2, ...
    """
    s = complex(s)
    if _is_gamma_pole(s):
        raise PoleAt(s, f"Gamma has a pole at s = {s.real:g}")
    return complex(sp.gamma(s))


def complex_loggamma(s: complex) -> complex:
    """Principal branch of log Γ(s); finite where Γ(s) itself would overflow."""
    s = complex(s)
    if _is_gamma_pole(s):
        raise PoleAt(s, f"Gamma has a pole at s = {s.real:g}")
    return complex(sp.loggamma(s))


def reciprocal_gamma(s: complex) -> complex:
    """1/Γ(s), which is entire: zero at the poles of Γ."""
    return complex(sp.rgamma(complex(s)))


def gamma_ratio(s: complex, k: int) -> complex:
    """
    Γ(s-1+k)/Γ(s) as a finite product, never touching complex_gamma.

    k = 0 gives 1/(s-1), k = 1 gives 1, k >= 2 gives s(s+1)...(s+k-2).

    Raises:
        PoleAt: only for k = 0 at s = 1.
    """
    if k < 0:
        raise InvalidInput(f"gamma_ratio needs k >= 0, got {k}")
    s = complex(s)
    if k == 0:
        if s == 1:
            raise PoleAt(s, "Gamma(s-1)/Gamma(s) = 1/(s-1) has a pole at s = 1")
        return 1.0 / (s - 1.0)
    product = 1.0 + 0.0j
    for j in range(k - 1):
        product *= s + j
    return product
