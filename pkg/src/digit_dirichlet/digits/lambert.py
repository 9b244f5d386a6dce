"""
Lambert-form evaluation of the differenced digit-sum power series.

    p(y) = Σ_{n>=1} (d_b(n) - d_b(n-1)) y^n
         = y/(1-y) - (b-1) Σ_{k>=1} y^(b^k) / (1 - y^(b^k))

With y = e^(-x) every term is 1/(e^u - 1) for u = b^k x. Near x = 0 the
terms are O(1/x) while p is O(log 1/x), so p_exp splits each term as
1/u + g(u) and sums the 1/u parts in closed form.

Complex x with Re(x) > 0 is accepted as well; the Mellin remainders are
integrated along rays in the right half-plane at large heights.
"""

import logging
import math

import numpy as np
from numpy.polynomial import polynomial as P

from digit_dirichlet.digits.expansion import as_base
from digit_dirichlet.errors import OutOfDomain
from digit_dirichlet.special.bernoulli import bernoulli_float_table

logger = logging.getLogger(__name__)

# -log(1e-300): terms 1/(e^u - 1) with Re(u) beyond this are below 1e-300
UNDERFLOW_EXPONENT = -math.log(1e-300)

_SERIES_ORDER = 24
# g(u) = 1/(e^u - 1) - 1/u = Σ_{k>=1} B_k u^(k-1) / k!
_G_COEFFS = np.array(bernoulli_float_table(_SERIES_ORDER)[1:])


def _as_real_or_complex(x) -> np.ndarray:
    arr = np.asarray(x)
    return arr.astype(complex) if np.iscomplexobj(arr) else arr.astype(float)


def inverse_expm1(u: np.ndarray) -> np.ndarray:
    """1/(e^u - 1), set to zero once Re(u) passes the underflow exponent."""
    u = _as_real_or_complex(u)
    out = np.zeros_like(u)
    live = u.real < UNDERFLOW_EXPONENT
    out[live] = 1.0 / np.expm1(u[live])
    return out


def regularized_bose(u: np.ndarray) -> np.ndarray:
    """g(u) = 1/(e^u - 1) - 1/u for Re(u) > 0, by its Taylor series when |u| <= 1."""
    u = _as_real_or_complex(u)
    out = np.empty_like(u)
    small = np.abs(u) <= 1.0
    out[small] = P.polyval(u[small], _G_COEFFS)
    large = ~small
    out[large] = inverse_expm1(u[large]) - 1.0 / u[large]
    return out


def _p_small(base: int, x: np.ndarray) -> np.ndarray:
    # J = number of lattice terms until Re(b^J x) passes the underflow exponent
    J = np.ceil(np.log(UNDERFLOW_EXPONENT / x.real) / math.log(base)).astype(int)
    J = np.maximum(J, 1)
    total = base ** (-J.astype(float)) / x + regularized_bose(x)
    u = x.copy()
    for k in range(1, int(J.max()) + 1):
        u = u * base
        active = k <= J
        total[active] -= (base - 1) * regularized_bose(u[active])
    return total


def _p_large(base: int, x: np.ndarray) -> np.ndarray:
    total = inverse_expm1(x)
    u = x.copy()
    while True:
        u = u * base
        active = u.real < UNDERFLOW_EXPONENT
        if not active.any():
            break
        total[active] -= (base - 1) / np.expm1(u[active])
    return total


def p_exp(b: int, x: complex | np.ndarray) -> complex | np.ndarray:
    """
    Evaluate p(e^(-x)) for Re(x) > 0.

    Args:
        b: Integer base (>= 2).
        x: Real or complex scalar or array with positive real part.

    Returns:
        p(e^(-x)); a float for real scalar input, a complex for complex
        scalar input, an array otherwise.

    Raises:
        OutOfDomain: if any x is not finite or has Re(x) <= 0.
    """
    base = as_base(b)
    scalar = np.ndim(x) == 0
    xs = np.atleast_1d(_as_real_or_complex(x))
    if not np.all(np.isfinite(xs)) or np.any(xs.real <= 0.0):
        raise OutOfDomain("p(e^-x) needs Re(x) > 0")

    out = np.empty_like(xs)
    small = np.abs(xs) < 1.0
    if small.any():
        out[small] = _p_small(base, xs[small])
    if (~small).any():
        out[~small] = _p_large(base, xs[~small])
    if scalar:
        return complex(out[0]) if np.iscomplexobj(out) else float(out[0])
    return out


def p_lambert(b: int, y: float | np.ndarray) -> float | np.ndarray:
    """
    p(y) = Σ (d_b(n) - d_b(n-1)) y^n via the Lambert form.

    Raises:
        OutOfDomain: unless 0 < y < 1.
    """
    ys = np.asarray(y, dtype=float)
    if np.any(~(ys > 0.0)) or np.any(~(ys < 1.0)):
        raise OutOfDomain(f"p_lambert needs 0 < y < 1, got {y}")
    return p_exp(b, -np.log(ys))


def digit_sum_power_series(b: int, x: complex | np.ndarray) -> complex | np.ndarray:
    """Σ_{n>=1} d_b(n) e^(-nx) = p(e^(-x)) / (1 - e^(-x)), for Re(x) > 0."""
    p = p_exp(b, x)
    return p / -np.expm1(-_as_real_or_complex(x))
