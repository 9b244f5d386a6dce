"""
Quadrature on (0, ∞) for Mellin-type integrals.

The interval is split at x = 1. The piece next to the origin, where the
integrands behave like x^a log(1/x)^j with an exponent that moves with s,
goes to tanh-sinh quadrature with step halving. The rest is covered by
geometric panels [1, 2], [2, 4], ... handed to scipy's adaptive
Gauss-Kronrod integrator until a panel contributes less than tol/10.

Integrands take a 1-d numpy array of x > 0 and return complex values of the
same shape.
"""

import logging
import math
from collections.abc import Callable

import numpy as np
from scipy import integrate
from scipy.special import expit

from digit_dirichlet.errors import NonConvergence
from digit_dirichlet.numerics.results import QuadratureResult
from digit_dirichlet.special.gamma import reciprocal_gamma

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

MAX_EVALUATIONS = 2**20
_T_MAX = 4.5
_MAX_LEVELS = 12
_MAX_PANELS = 64
_MIN_REACH = 32.0
DEFAULT_REL_TOL = 1e-13
_GK_SUBINTERVALS = 200
_ROUNDOFF = 64 * np.finfo(float).eps


def _tanh_sinh_nodes(a: float, b: float, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and Jacobian weights of the map t -> x on [a, b], accurate next to either endpoint."""
    length = b - a
    v = math.pi * np.sinh(t)
    lower, upper = expit(v), expit(-v)
    x = np.where(v <= 0, a + length * lower, b - length * upper)
    w = length * math.pi * np.cosh(t) * lower * upper
    return x, w


def _weighted_sum(f: Integrand, a: float, b: float, t: np.ndarray) -> tuple[complex, float]:
    x, w = _tanh_sinh_nodes(a, b, t)
    keep = (x > a) & (x < b) & (w > 0)
    values = np.asarray(f(x[keep]), dtype=complex) * w[keep]
    if not np.all(np.isfinite(values)):
        raise NonConvergence(f"integrand is not finite on ({a}, {b})")
    return complex(np.sum(values)), float(np.sum(np.abs(values)))


def tanh_sinh(f: Integrand, a: float, b: float, tol: float) -> QuadratureResult:
    """
    Integrate f over (a, b) by tanh-sinh quadrature, halving the step until
    two successive levels agree to tol/2.

    Raises:
        NonConvergence: if the level limit or the evaluation cap is reached.
    """
    h = 0.5
    t = np.arange(-math.ceil(_T_MAX / h), math.ceil(_T_MAX / h) + 1) * h
    total, magnitude = _weighted_sum(f, a, b, t)
    estimate = h * total
    count = len(t)
    for level in range(1, _MAX_LEVELS + 1):
        h /= 2.0
        j = np.arange(-math.ceil(_T_MAX / h), math.ceil(_T_MAX / h) + 1)
        t_new = j[j % 2 == 1] * h
        added, added_magnitude = _weighted_sum(f, a, b, t_new)
        count += len(t_new)
        total += added
        magnitude += added_magnitude
        previous, estimate = estimate, h * total
        error = abs(estimate - previous)
        floor = _ROUNDOFF * h * magnitude
        if level >= 3 and error <= max(tol / 2.0, floor):
            logger.debug(f"tanh-sinh on ({a}, {b}) converged at level {level} with {count} nodes")
            return QuadratureResult(estimate, max(error, floor), count, h * magnitude)
        if count > MAX_EVALUATIONS:
            break
    raise NonConvergence(f"tanh-sinh on ({a}, {b}) did not reach {tol:.1e} (last change {error:.3e})")


def _gauss_kronrod_panel(f: Integrand, a: float, b: float, tol: float, rel_tol: float) -> QuadratureResult:
    def components(x: float) -> np.ndarray:
        value = complex(np.asarray(f(np.array([x])), dtype=complex)[0])
        return np.array([value.real, value.imag, abs(value)])

    res, err, info = integrate.quad_vec(
        components, a, b, epsabs=tol, epsrel=rel_tol, limit=_GK_SUBINTERVALS, full_output=True
    )
    if not np.all(np.isfinite(res)):
        raise NonConvergence(f"integrand is not finite on [{a}, {b}]")
    return QuadratureResult(complex(res[0], res[1]), float(err), int(info.neval), float(res[2]))


def integrate_zero_to_infinity(
    f: Integrand,
    tol: float,
    lower: float = 0.0,
    rel_tol: float = DEFAULT_REL_TOL,
) -> QuadratureResult:
    """
    Integrate f over (lower, ∞).

    Args:
        f: Vectorized integrand with at worst x^a (a > -1) growth at the
            lower endpoint and exponential decay at infinity.
        tol: Absolute tolerance on the total.
        lower: Lower endpoint, 0 by default.
        rel_tol: Relative accuracy, against ∫|f|, accepted when tol lies
            below the roundoff level of the integral.

    Returns:
        QuadratureResult whose error estimate sums the piece estimates and
        never falls below the roundoff level of ∫|f|.

    Raises:
        NonConvergence: if the estimate exceeds max(tol, rel_tol * ∫|f|)
            or 2^20 evaluations are spent.
    """
    if lower < 1.0:
        result = tanh_sinh(f, lower, 1.0, tol / 2.0)
        left = 1.0
    else:
        result = QuadratureResult(0.0j, 0.0, 0)
        left = lower

    panel_tol = tol / (4.0 * _MAX_PANELS)
    for _ in range(_MAX_PANELS):
        right = 2.0 * left
        panel = _gauss_kronrod_panel(f, left, right, panel_tol, rel_tol)
        result = result + panel
        left = right
        if result.evaluation_count > MAX_EVALUATIONS:
            raise NonConvergence(f"quadrature exceeded {MAX_EVALUATIONS} evaluations")
        if left >= _MIN_REACH and abs(panel.value) + panel.abs_error_estimate < tol / 10.0:
            break
    else:
        raise NonConvergence(f"integrand still contributes beyond x = {left:g}")

    # Below rel_tol * ∫|f| the error is cancellation, not truncation
    accepted = max(tol, rel_tol * result.l1_norm)
    if result.abs_error_estimate > accepted:
        raise NonConvergence(
            f"quadrature error estimate {result.abs_error_estimate:.3e} exceeds tolerance {accepted:.1e}"
        )
    roundoff = _ROUNDOFF * result.l1_norm
    if result.abs_error_estimate < roundoff:
        result = QuadratureResult(result.value, roundoff, result.evaluation_count, result.l1_norm)
    logger.debug(f"quadrature on ({lower}, ∞): {result.evaluation_count} evaluations, panels up to {left:g}")
    return result


def mellin_power_series(series_fn: Integrand, s: complex, tol: float) -> QuadratureResult:
    """
    Γ(s)^-1 ∫_0^∞ series_fn(x) x^(s-1) dx.

    For series_fn(x) = Σ a_n e^(-nx) this is the Dirichlet series Σ a_n n^(-s)
    wherever the latter converges absolutely.
    """
    s = complex(s)

    def integrand(x: np.ndarray) -> np.ndarray:
        return np.asarray(series_fn(x)) * np.exp((s - 1.0) * np.log(x))

    return integrate_zero_to_infinity(integrand, tol).scaled(reciprocal_gamma(s))
