"""
Evaluators for Z_b, F_b and G_b on their meromorphic continuations.

Z_b(s) = Σ (d_b(n) - d_b(n-1)) n^-s has the closed form
(b^s - b)/(b^s - 1) ζ(s). F_b and G_b are continued by expanding the
Mellin kernel in Bernoulli numbers: the first K terms are explicit
multiples of shifted Z_b values, and the rest is an integral over
p(e^-x) that converges for Re(s) > 1 - K (F_b) or 2 - K (G_b).
"""

import cmath
import logging
import math
from collections.abc import Callable

import numpy as np
from numpy.polynomial import polynomial as P

from digit_dirichlet.digits.expansion import as_base
from digit_dirichlet.digits.lambert import digit_sum_power_series, p_exp
from digit_dirichlet.errors import InvalidInput, OutOfDomain, PoleAt
from digit_dirichlet.numerics.quadrature import integrate_zero_to_infinity
from digit_dirichlet.numerics.results import EvalResult, QuadratureResult
from digit_dirichlet.precision_config import PrecisionProfile, default_profile, get_numeric_config
from digit_dirichlet.series.lattice import SeriesTag, check_not_pole, default_bernoulli_K
from digit_dirichlet.special.bernoulli import bernoulli_float_table, bernoulli_number
from digit_dirichlet.special.gamma import gamma_ratio, reciprocal_gamma
from digit_dirichlet.special.zeta import riemann_zeta_with_error

logger = logging.getLogger(__name__)

ZB_POLE_TOLERANCE = 1e-12
_REMOVABLE_RADIUS = 1e-6
_DOMAIN_MARGIN = 0.05
# Below this |x| the Bernoulli brackets are summed as series tails
_SERIES_REACH = 2.0
_TAIL_TERMS = 60
# Above this |Im s| the remainder integral is taken along a ray x = r e^(iφ)
ROTATION_HEIGHT = 4.0
# π/2 - |φ| = min(π/4, _TILT / |Im s|)
_TILT = 2.0


# ============================================================================
# Z_b
# ============================================================================


def zb_factor_residue(b: int) -> float:
    """Residue -(b-1)/log b of (b^s - b)/(b^s - 1) at every point 2πim/log b."""
    base = as_base(b)
    return -(base - 1) / math.log(base)


def zb_laurent_at_zero(b: int) -> tuple[float, float]:
    """
    (a_{-1}, a_0) of Z_b at s = 0.

    a_{-1} = (b-1)/(2 log b), a_0 = -(b+1)/4 + (b-1) log(2π)/(2 log b).
    """
    base = as_base(b)
    L = math.log(base)
    return (base - 1) / (2 * L), -(base + 1) / 4 + (base - 1) * math.log(2 * math.pi) / (2 * L)


def _zb_factor(base: int, s: complex) -> complex:
    L = math.log(base)
    if s.real > 0:
        return (1.0 - cmath.exp((1.0 - s) * L)) / (1.0 - cmath.exp(-s * L))
    b_s = cmath.exp(s * L)
    return (b_s - base) / (b_s - 1.0)


def _zb_near_one(base: int, s: complex) -> complex:
    # (b^s - b)/(b^s - 1) has a simple zero at s = 1 that cancels the pole of ζ
    t = s - 1.0
    L = math.log(base)
    lead = base * L / (base - 1)
    return lead * (1.0 + t * (np.euler_gamma + L / 2 - lead))


def zb_eval_with_error(b: int, s: complex, profile: PrecisionProfile | None = None) -> EvalResult:
    """
    Z_b(s) from its closed form, with the propagated ζ error estimate.

    Raises:
        PoleAt: within 1e-12 of a point 2πim/log b.
    """
    base = as_base(b)
    s = complex(s)
    check_not_pole(SeriesTag.ZB, base, s, guard=ZB_POLE_TOLERANCE)
    if abs(s - 1.0) < _REMOVABLE_RADIUS:
        return EvalResult.exact(_zb_near_one(base, s), abs(s - 1.0) ** 2, base=base)
    factor = _zb_factor(base, s)
    zeta, zeta_error = riemann_zeta_with_error(s, profile)
    return EvalResult.exact(factor * zeta, abs(factor) * zeta_error, base=base)


def zb_eval(b: int, s: complex, profile: PrecisionProfile | None = None) -> complex:
    """
    Z_b(s) = (b^s - b)/(b^s - 1) ζ(s).

    Args:
        b: Integer base (>= 2).
        s: Complex argument off the lattice 2πim/log b.

    Returns:
        The value of the meromorphic continuation.
    """
    return zb_eval_with_error(b, s, profile).value


# ============================================================================
# Bernoulli brackets
# ============================================================================


def _signed_bernoulli_coefficients(n: int) -> np.ndarray:
    """(-1)^k B_k / k! for k = 0..n."""
    table = np.array(bernoulli_float_table(n))
    return table * (-1.0) ** np.arange(n + 1)


def fb_bracket(x: np.ndarray, K: int) -> np.ndarray:
    """x/(1 - e^-x) minus its Taylor polynomial of degree K."""
    coeffs = _signed_bernoulli_coefficients(K + _TAIL_TERMS)
    out = np.empty_like(x)
    small = np.abs(x) <= _SERIES_REACH
    tail = coeffs.copy()
    tail[: K + 1] = 0.0
    out[small] = P.polyval(x[small], tail)
    large = ~small
    out[large] = x[large] / -np.expm1(-x[large]) - P.polyval(x[large], coeffs[: K + 1])
    return out


def gb_bracket(x: np.ndarray, K: int) -> np.ndarray:
    """x^2 e^-x/(1 - e^-x)^2 minus its Taylor polynomial of degree K."""
    n = K + _TAIL_TERMS
    # x^2 e^-x/(1 - e^-x)^2 = -Σ B_k (k-1)/k! x^k
    coeffs = -np.array(bernoulli_float_table(n)) * (np.arange(n + 1) - 1.0)
    out = np.empty_like(x)
    small = np.abs(x) <= _SERIES_REACH
    tail = coeffs.copy()
    tail[: K + 1] = 0.0
    out[small] = P.polyval(x[small], tail)
    large = ~small
    xl = x[large]
    out[large] = xl * xl * np.exp(-xl) / np.expm1(-xl) ** 2 - P.polyval(xl, coeffs[: K + 1])
    return out


def bose_bracket(x: np.ndarray, K: int) -> np.ndarray:
    """1/(e^x - 1) minus Σ_{k<=K} B_k x^(k-1)/k!."""
    n = K + _TAIL_TERMS
    coeffs = np.array(bernoulli_float_table(n))
    out = np.empty_like(x)
    small = np.abs(x) <= _SERIES_REACH
    tail = coeffs[1:].copy()
    tail[:K] = 0.0
    out[small] = P.polyval(x[small], tail)
    large = ~small
    xl = x[large]
    out[large] = 1.0 / np.expm1(xl) - 1.0 / xl - P.polyval(xl, coeffs[1 : K + 1])
    return out


# ============================================================================
# Shared plumbing
# ============================================================================


def _resolve_K(tag: SeriesTag, s: complex, K: int | None, minimum: int) -> int:
    if K is None:
        return default_bernoulli_K(tag, s)
    if isinstance(K, bool) or not isinstance(K, int) or K < minimum:
        raise InvalidInput(f"K must be an integer >= {minimum}, got {K!r}")
    limit = get_numeric_config().series.max_bernoulli_K
    if K > limit:
        raise InvalidInput(f"K = {K} exceeds the Bernoulli limit {limit}")
    return K


def _check_domain(tag: SeriesTag, s: complex, K: int, top: float) -> None:
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise InvalidInput(f"s must be finite, got {s}")
    if s.real <= top - K + _DOMAIN_MARGIN:
        raise OutOfDomain(f"{tag.value} with K={K} needs Re(s) > {top - K + _DOMAIN_MARGIN:g}, got {s.real}")


def ray_angle(s: complex) -> float:
    """
    Angle φ of the ray used for the remainder integral at s.

    0 (the real axis) up to |Im s| = ROTATION_HEIGHT; beyond it φ has the sign
    of Im s and π/2 - |φ| = min(π/4, 2/|Im s|). On the real axis the integral
    is about e^(-π|Im s|/2) times ∫|integrand|; on the ray the two are comparable.
    """
    t = complex(s).imag
    if abs(t) <= ROTATION_HEIGHT:
        return 0.0
    return math.copysign(math.pi / 2 - min(math.pi / 4, _TILT / abs(t)), t)


def _remainder(
    bracket: Callable[[np.ndarray], np.ndarray],
    weight: Callable[[np.ndarray], np.ndarray],
    s: complex,
    shift: float,
    tol: float,
) -> QuadratureResult:
    """
    Γ(s)^-1 ∫_0^∞ bracket(x) weight(x) x^(s-shift) dx.

    Both factors are analytic for Re(x) > 0 and the integrand decays in the
    whole sector, so the path may be turned to x = r e^(iφ), φ = ray_angle(s):

        ∫_0^∞ F(x) x^(s-shift) dx = e^(iφ(s-shift+1)) ∫_0^∞ F(r e^(iφ)) r^(s-shift) dr
    """
    rgamma = reciprocal_gamma(s)
    if rgamma == 0:
        return QuadratureResult(0.0j, 0.0, 0)
    phi = ray_angle(s)
    if phi == 0.0:
        direction = 1.0
        prefactor = rgamma
    else:
        direction = cmath.exp(1j * phi)
        prefactor = rgamma * cmath.exp(1j * phi * (s - shift + 1.0))
        logger.debug(f"remainder at {s} integrated along arg x = {phi:.4f}")

    def integrand(r: np.ndarray) -> np.ndarray:
        x = r * direction
        return bracket(x) * weight(x) * np.exp((s - shift) * np.log(r))

    return integrate_zero_to_infinity(integrand, tol / abs(prefactor)).scaled(prefactor)


# ============================================================================
# F_b and G_b
# ============================================================================


def fb_eval(
    b: int,
    s: complex,
    K: int | None = None,
    tol: float | None = None,
    profile: PrecisionProfile | None = None,
) -> EvalResult:
    """
    F_b(s) = Σ d_b(n) n^-s on its continuation.

        F_b(s) = Σ_{k=0}^{K} (-1)^k B_k/k! Γ(s-1+k)/Γ(s) Z_b(s-1+k) + R_K(s)

    Args:
        b: Integer base (>= 2).
        s: Argument with Re(s) > 1 - K + 0.05, off the pole lattice.
        K: Bernoulli truncation; the default rule when None.
        tol: Absolute tolerance on the remainder integral.
        profile: Precision profile for the ζ values.

    Returns:
        EvalResult with K_used and the quadrature summary.

    Raises:
        PoleAt: near a pole 1 - k + 2πim/log b.
        OutOfDomain: left of the half-plane covered by K.
        NonConvergence: from the quadrature or ζ.
    """
    base = as_base(b)
    s = complex(s)
    K = _resolve_K(SeriesTag.FB, s, K, 1)
    _check_domain(SeriesTag.FB, s, K, 1.0)
    check_not_pole(SeriesTag.FB, base, s)
    tol = get_numeric_config().series.quad_tol if tol is None else tol
    profile = profile or default_profile()

    coeffs = _signed_bernoulli_coefficients(K)
    value = 0.0j
    error = 0.0
    for k in range(K + 1):
        if bernoulli_number(k) == 0:
            continue
        factor = coeffs[k] * gamma_ratio(s, k)
        term = zb_eval_with_error(base, s - 1.0 + k, profile)
        value += factor * term.value
        error += abs(factor) * term.abs_error_estimate

    remainder = _remainder(lambda x: fb_bracket(x, K), lambda x: p_exp(base, x), s, 2.0, tol)
    logger.debug(f"F_{base}({s}) with K={K}: remainder {remainder.value:.3e}")
    return EvalResult.from_expansion(value + remainder.value, error, K, remainder, base=base, tol=tol)


def gb_eval(
    b: int,
    s: complex,
    K: int | None = None,
    tol: float | None = None,
    profile: PrecisionProfile | None = None,
) -> EvalResult:
    """
    G_b(s) = Σ S_b(n) n^-s on its continuation.

        G_b(s) = Z_b(s-2)/((s-1)(s-2))
                 - Σ_{k=2}^{K} B_k/(k (k-2)!) s(s+1)...(s+k-3) Z_b(s-2+k) + R_K(s)

    Args:
        b: Integer base (>= 2).
        s: Argument with Re(s) > 2 - K + 0.05, off the pole lattice.
        K: Bernoulli truncation (>= 2); the default rule when None.
        tol: Absolute tolerance on the remainder integral.
        profile: Precision profile for the ζ values.

    Raises:
        PoleAt: near a pole 2 - k + 2πim/log b or at s = 1.
        OutOfDomain: left of the half-plane covered by K.
        NonConvergence: from the quadrature or ζ.
    """
    base = as_base(b)
    s = complex(s)
    K = _resolve_K(SeriesTag.GB, s, K, 2)
    _check_domain(SeriesTag.GB, s, K, 2.0)
    check_not_pole(SeriesTag.GB, base, s)
    tol = get_numeric_config().series.quad_tol if tol is None else tol
    profile = profile or default_profile()

    head = zb_eval_with_error(base, s - 2.0, profile)
    scale = 1.0 / ((s - 1.0) * (s - 2.0))
    value = head.value * scale
    error = head.abs_error_estimate * abs(scale)
    for k in range(2, K + 1):
        bk = bernoulli_number(k)
        if bk == 0:
            continue
        factor = -float(bk / (k * math.factorial(k - 2))) * gamma_ratio(s, k - 1)
        term = zb_eval_with_error(base, s - 2.0 + k, profile)
        value += factor * term.value
        error += abs(factor) * term.abs_error_estimate

    remainder = _remainder(lambda x: gb_bracket(x, K), lambda x: p_exp(base, x), s, 3.0, tol)
    logger.debug(f"G_{base}({s}) with K={K}: remainder {remainder.value:.3e}")
    return EvalResult.from_expansion(value + remainder.value, error, K, remainder, base=base, tol=tol)


def gb_eval_via_fb(
    b: int,
    s: complex,
    K: int | None = None,
    tol: float | None = None,
    profile: PrecisionProfile | None = None,
) -> EvalResult:
    """
    G_b(s) continued through F_b instead of Z_b.

        G_b(s) = Σ_{k=0}^{K} B_k/k! Γ(s-1+k)/Γ(s) F_b(s-1+k) + R'_K(s)

    where R'_K integrates the tail of 1/(e^x - 1) against Σ d_b(n) e^-nx.
    Independent of gb_eval except for the shared Z_b values, so the two
    cross-check each other.
    """
    base = as_base(b)
    s = complex(s)
    K = _resolve_K(SeriesTag.GB, s, K, 2)
    _check_domain(SeriesTag.GB, s, K, 2.0)
    check_not_pole(SeriesTag.GB, base, s)
    tol = get_numeric_config().series.quad_tol if tol is None else tol

    table = bernoulli_float_table(K)
    value = 0.0j
    error = 0.0
    for k in range(K + 1):
        if table[k] == 0.0:
            continue
        factor = table[k] * gamma_ratio(s, k)
        try:
            term = fb_eval(base, s - 1.0 + k, tol=tol, profile=profile)
        except PoleAt as e:
            raise PoleAt(s, f"F_b term {k} of the expansion is singular at {s}: {e}") from e
        value += factor * term.value
        error += abs(factor) * term.abs_error_estimate

    remainder = _remainder(
        lambda x: bose_bracket(x, K), lambda x: digit_sum_power_series(base, x), s, 1.0, tol
    )
    return EvalResult.from_expansion(value + remainder.value, error, K, remainder, base=base, tol=tol, route="Fb")
