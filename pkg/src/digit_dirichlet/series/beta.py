"""
Continuations of G_β (to Re s > 1) and F_β (to Re s > 0) for real β > 1.

    G_β(s) = -a ζ'(s-1) + Σ_k c_β(k) ζ(s-1-iτk)
    F_β(s) = -S_β(1)(s+1) + s G_β(s+1) + R(s)
    R(s)   = Γ(s)^-1 ∫_0^∞ (e^x - 1 - x) Σ_{n>=2} S_β(n) e^-nx x^(s-1) dx

with a = (β-1)/(2 log β) and τ = 2π/log β. Both evaluators use the same
Fourier truncation, so they carry exactly the poles and residues of the
truncated model.
"""

import cmath
import logging
import math

import numpy as np

from digit_dirichlet.delange.coefficients import (
    BetaParam,
    as_beta,
    constant_coefficient,
    decay_constant,
    delange_coefficients,
)
from digit_dirichlet.errors import InvalidInput, OutOfDomain, PoleAt, TableTooShort
from digit_dirichlet.numerics.quadrature import integrate_zero_to_infinity
from digit_dirichlet.numerics.results import EvalResult
from digit_dirichlet.precision_config import FourierTruncation, PrecisionProfile, default_profile, get_numeric_config
from digit_dirichlet.series.sbeta_table import SbetaTable, build_sbeta_table
from digit_dirichlet.special.gamma import complex_loggamma, reciprocal_gamma
from digit_dirichlet.special.zeta import riemann_zeta_derivative_with_error, riemann_zeta_with_error

logger = logging.getLogger(__name__)

GBETA_DOMAIN = 1.0 + 1e-3
# F_β inherits its half-plane from G_β(s+1)
FBETA_DOMAIN = GBETA_DOMAIN - 1.0
BETA_POLE_TOLERANCE = 1e-9
SMALL_X_CUTOFF = 0.05
_LOG_UNDERFLOW = -700.0


def gbeta_laurent_at_two(beta: BetaParam | float) -> tuple[float, float]:
    """(a_{-2}, a_{-1}) of G_β at its double pole s = 2: (a, c_β(0))."""
    p = as_beta(beta)
    return p.leading, constant_coefficient(p)


def fbeta_laurent_at_one(beta: BetaParam | float) -> tuple[float, float]:
    """(a_{-2}, a_{-1}) of F_β at its double pole s = 1: (a, c_β(0) + a)."""
    p = as_beta(beta)
    return p.leading, constant_coefficient(p) + p.leading


def _check_beta_pole(p: BetaParam, s: complex, top: float, label: str) -> None:
    k = round(s.imag / p.tau)
    location = complex(top, p.tau * k)
    if abs(s - location) < BETA_POLE_TOLERANCE:
        raise PoleAt(location, f"{label} has a pole at {location} (k={k})")


def _truncation_estimate(coefficients: np.ndarray, tau: float, sigma: float) -> float:
    """Σ_{|k|>K} |c_β(k)| |ζ(σ + iτk)| from the k^-3/2 envelope and a growth bound for ζ."""
    K = (len(coefficients) - 1) // 2
    C = decay_constant(coefficients)
    if sigma > 1.0:
        return 4.0 * C / math.sqrt(K) * riemann_zeta_with_error(sigma)[0].real
    mu = (1.0 - sigma) / 2.0
    return 2.0 * C * tau**mu * math.log(tau * K + math.e) * K ** (mu - 0.5) / (0.5 - mu)


def g_beta_eval(
    beta: BetaParam | float,
    s: complex,
    trunc: FourierTruncation | None = None,
    profile: PrecisionProfile | None = None,
) -> EvalResult:
    """
    G_β(s) = Σ S_β(n) n^-s on Re(s) > 1.

    Args:
        beta: β > 1.
        s: Argument with Re(s) > 1 + 1e-3, off the poles 2 + iτk.
        trunc: Fourier cutoff; the configured default when None.
        profile: Precision profile for ζ and ζ'.

    Returns:
        EvalResult; the estimate adds ζ errors and the Fourier truncation.

    Raises:
        OutOfDomain: for Re(s) <= 1 + 1e-3.
        PoleAt: within 1e-9 of 2 + iτk.
    """
    p = as_beta(beta)
    s = complex(s)
    if s.real <= GBETA_DOMAIN:
        raise OutOfDomain(f"G_beta is continued to Re(s) > {GBETA_DOMAIN:g} only, got {s}")
    _check_beta_pole(p, s, 2.0, "G_beta")
    trunc = trunc or get_numeric_config().truncation
    profile = profile or default_profile()
    coefficients = delange_coefficients(p, trunc, profile)
    K = trunc.cutoff_K

    derivative, error = riemann_zeta_derivative_with_error(s - 1.0, profile)
    value = -p.leading * derivative
    error *= p.leading
    shifts = s - 1.0 - 1j * p.tau * np.arange(-K, K + 1)
    for c, w in zip(coefficients, shifts):
        zeta, zeta_error = riemann_zeta_with_error(w, profile)
        value += c * zeta
        error += abs(c) * zeta_error
    truncation = _truncation_estimate(coefficients, p.tau, s.real - 1.0)
    return EvalResult(
        value=complex(value),
        abs_error_estimate=float(error + truncation),
        parameters={"beta": p.beta, "cutoff_K": K, "truncation_estimate": truncation},
    )


def _exp_minus_one_minus_x(x: np.ndarray) -> np.ndarray:
    out = np.expm1(x) - x
    small = x < 1e-2
    xs = x[small]
    out[small] = xs * xs / 2.0 * (1.0 + xs / 3.0 * (1.0 + xs / 4.0 * (1.0 + xs / 5.0 * (1.0 + xs / 6.0))))
    return out


def lower_cutoff(table: SbetaTable, tol: float) -> float:
    """
    Smallest x >= x_floor at which the table resolves the power series.

    Chosen so that x Σ_{n>N_max} |S_β(n)| e^-nx < tol/10.

    Raises:
        TableTooShort: if that x exceeds 0.05, where the small-x
            correction is no longer usable.
    """
    floor = get_numeric_config().beta_series.x_floor
    N = table.N_max

    def resolved(x: float) -> bool:
        return x * table.series_tail(N, x) < tol / 10.0

    if resolved(floor):
        return floor
    if not resolved(SMALL_X_CUTOFF):
        raise TableTooShort(f"S_beta table with N_max={N} cannot resolve the integral below x={SMALL_X_CUTOFF}")
    lo, hi = math.log(floor), math.log(SMALL_X_CUTOFF)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if resolved(math.exp(mid)):
            hi = mid
        else:
            lo = mid
    return math.exp(hi)


def _small_x_correction(p: BetaParam, coefficients: np.ndarray, s: complex, X: float) -> tuple[complex, float]:
    """The (0, X) part of R(s) from the small-x expansion of the power series, and its error estimate."""
    K = (len(coefficients) - 1) // 2
    a = p.leading
    c0 = coefficients[K].real
    log_X = math.log(X)
    X_s = cmath.exp(s * log_X)
    total = (a * (1.0 - np.euler_gamma) + c0) * X_s / s - a * X_s * (log_X / s - 1.0 / (s * s))
    for k in range(-K, K + 1):
        if k == 0:
            continue
        shift = 1j * p.tau * k
        log_gamma = complex_loggamma(2.0 + shift)
        if log_gamma.real < _LOG_UNDERFLOW:
            continue
        total += cmath.exp(log_gamma) * coefficients[K + k] * cmath.exp((s - shift) * log_X) / (s - shift)
    correction = 0.5 * reciprocal_gamma(s) * total
    return correction, X * (1.0 + abs(log_X)) * abs(correction)


def f_beta_eval(
    beta: BetaParam | float,
    s: complex,
    table: SbetaTable | None = None,
    tol: float | None = None,
    profile: PrecisionProfile | None = None,
) -> EvalResult:
    """
    F_β(s) = Σ d_β(n) n^-s on Re(s) > 0.

    Args:
        beta: β > 1.
        s: Argument with Re(s) > 1e-3, off the poles 1 + iτk.
        table: S_β table; built (and cached) from config.yaml defaults when None.
        tol: Absolute tolerance on R(s); config.yaml's quad_tol when None.
        profile: Precision profile for ζ.

    Returns:
        EvalResult combining the G_β, quadrature and small-x estimates.

    Raises:
        OutOfDomain: for Re(s) <= 1e-3.
        PoleAt: within 1e-9 of 1 + iτk.
        TableTooShort: if the table cannot resolve the integral.
        NonConvergence: from the quadrature or ζ.
    """
    p = as_beta(beta)
    s = complex(s)
    if s.real <= FBETA_DOMAIN:
        raise OutOfDomain(f"F_beta is continued to Re(s) > {FBETA_DOMAIN:g} only, got {s}")
    _check_beta_pole(p, s, 1.0, "F_beta")
    table = table or build_sbeta_table(p)
    if table.beta.beta != p.beta:
        raise InvalidInput(f"table was built for beta={table.beta.beta}, not {p.beta}")
    tol = get_numeric_config().series.quad_tol if tol is None else tol
    trunc = table.truncation

    shifted = g_beta_eval(p, s + 1.0, trunc, profile)
    S1 = table[1]
    value = -S1 * (s + 1.0) + s * shifted.value
    error = abs(s) * shifted.abs_error_estimate

    X = lower_cutoff(table, tol)
    rgamma = reciprocal_gamma(s)

    def integrand(x: np.ndarray) -> np.ndarray:
        out = np.empty(x.shape, dtype=complex)
        small = x < 1.0
        xs, xl = x[small], x[~small]
        out[small] = _exp_minus_one_minus_x(xs) * table.power_series(xs) * np.exp((s - 1.0) * np.log(xs))
        # e^x P(x) - (1 + x) P(x), with e^x folded into the exponents
        body = table.power_series(xl, shift=1) - (1.0 + xl) * table.power_series(xl)
        out[~small] = body * np.exp((s - 1.0) * np.log(xl))
        return out

    quadrature = integrate_zero_to_infinity(integrand, tol / abs(rgamma), lower=X).scaled(rgamma)
    correction, correction_error = _small_x_correction(p, delange_coefficients(p, trunc, profile), s, X)
    logger.debug(f"F_beta({s}) for beta={p.beta}: x_min={X:.3e}, correction {correction:.3e}")
    return EvalResult.from_expansion(
        value + quadrature.value + correction,
        error + correction_error,
        0,
        quadrature,
        beta=p.beta,
        cutoff_K=trunc.cutoff_K,
        N_max=table.N_max,
        x_min=X,
    )
