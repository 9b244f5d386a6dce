"""
Riemann zeta function and its derivative for complex arguments.

Euler-Maclaurin summation is used to the right of the reflection threshold
(and in a small disc around the origin); the functional equation
ζ(s) = 2^s π^(s-1) sin(πs/2) Γ(1-s) ζ(1-s) is used to the left of it.
The χ factor of the functional equation is formed in log space so that it
stays finite far up the imaginary axis, where sin(πs/2) and Γ(1-s) over-
and underflow separately.
"""

import cmath
import logging
import math
import threading

import numpy as np

from digit_dirichlet.errors import NonConvergence, OutOfDomain, PoleAt
from digit_dirichlet.precision_config import PrecisionProfile, default_profile
from digit_dirichlet.special.bernoulli import bernoulli_over_factorial
from digit_dirichlet.special.gamma import complex_loggamma

logger = logging.getLogger(__name__)

_LOG_2 = math.log(2.0)
_LOG_PI = math.log(math.pi)
_MAX_DOUBLINGS = 4

_log_table = np.zeros(0)
_log_lock = threading.Lock()


def _logs_below(N: int) -> np.ndarray:
    """log(n) for n = 1..N-1, from a shared table that only grows."""
    global _log_table
    if len(_log_table) < N - 1:
        with _log_lock:
            if len(_log_table) < N - 1:
                size = max(N - 1, 2 * len(_log_table))
                _log_table = np.log(np.arange(1, size + 1, dtype=float))
    return _log_table[: N - 1]


def _em_cutoff(s: complex, profile: PrecisionProfile) -> int:
    # The correction series behaves like (|s| / 2πN)^(2M); N ~ |s|/2 keeps the ratio near 1/π.
    return max(profile.em_cutoff_N, int(math.ceil(abs(s) / 2.0)) + 16)


def _em_terms(s: complex, N: int, M: int):
    """Yield (B_2j/(2j)!, Pochhammer product, N^(-s-2j+1)) for j = 1..M."""
    log_N = math.log(N)
    poch = s
    power = cmath.exp(-(s + 1.0) * log_N)
    for j in range(1, M + 1):
        yield bernoulli_over_factorial(2 * j), poch, power
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        power /= N * N


def _zeta_euler_maclaurin(s: complex, N: int, M: int) -> tuple[complex, float]:
    """ζ(s) by Euler-Maclaurin with N-1 direct terms and M corrections."""
    logs = _logs_below(N)
    head = complex(np.sum(np.exp(-s * logs)))
    N_s = cmath.exp(-s * math.log(N))
    value = head + N * N_s / (s - 1.0) + 0.5 * N_s
    last = 0.0
    for coeff, poch, power in _em_terms(s, N, M):
        term = coeff * poch * power
        value += term
        last = abs(term)
    return value, last


def _zeta_derivative_euler_maclaurin(s: complex, N: int, M: int) -> tuple[complex, float]:
    """ζ'(s) by term-wise differentiation of the Euler-Maclaurin formula."""
    logs = _logs_below(N)
    head = complex(-np.sum(logs * np.exp(-s * logs)))
    log_N = math.log(N)
    N_s = cmath.exp(-s * log_N)
    value = head - N * N_s * log_N / (s - 1.0) - N * N_s / (s - 1.0) ** 2 - 0.5 * log_N * N_s

    last = 0.0
    poch, dpoch = s, 1.0 + 0.0j
    power = cmath.exp(-(s + 1.0) * log_N)
    for j in range(1, M + 1):
        term = bernoulli_over_factorial(2 * j) * (dpoch - log_N * poch) * power
        value += term
        last = abs(term)
        for shift in (2 * j - 1, 2 * j):
            dpoch = dpoch * (s + shift) + poch
            poch = poch * (s + shift)
        power /= N * N
    return value, last


def _log_sin(z: complex) -> complex:
    """log sin(z) up to a multiple of 2πi, stable for large |Im z|."""
    if abs(z.imag) < 30.0:
        return cmath.log(cmath.sin(z))
    if z.imag > 0:
        return -1j * z + cmath.log(0.5j) + cmath.log(1.0 - cmath.exp(2j * z))
    return 1j * z + cmath.log(-0.5j) + cmath.log(1.0 - cmath.exp(-2j * z))


def chi_factor(s: complex) -> complex:
    """χ(s) = 2^s π^(s-1) sin(πs/2) Γ(1-s), so that ζ(s) = χ(s) ζ(1-s)."""
    s = complex(s)
    if s.imag == 0.0 and s.real < 0 and s.real % 2.0 == 0.0:
        return 0.0j  # trivial zeros
    half_pi_s = 0.5 * math.pi * s
    if abs(s.imag) < 30.0 and s.real > -100.0:
        sine = cmath.sin(half_pi_s)
        if sine == 0:
            return 0.0j
        return cmath.exp(s * _LOG_2 + (s - 1.0) * _LOG_PI + complex_loggamma(1.0 - s)) * sine
    return cmath.exp(s * _LOG_2 + (s - 1.0) * _LOG_PI + _log_sin(half_pi_s) + complex_loggamma(1.0 - s))


def _direct_with_error(s: complex, profile: PrecisionProfile) -> tuple[complex, float]:
    N = _em_cutoff(s, profile)
    for _ in range(_MAX_DOUBLINGS + 1):
        value, error = _zeta_euler_maclaurin(s, N, profile.em_order_M)
        if error <= profile.target_abs_tol:
            return value, error
        N *= 2
    raise NonConvergence(f"zeta({s}) error estimate {error:.3e} above {profile.target_abs_tol:.1e} at N={N // 2}")


def _reflected_with_error(s: complex, profile: PrecisionProfile) -> tuple[complex, float]:
    mirror, mirror_error = _direct_with_error(1.0 - s, profile)
    chi = chi_factor(s)
    return chi * mirror, abs(chi) * mirror_error


def riemann_zeta_with_error(
    s: complex,
    profile: PrecisionProfile | None = None,
) -> tuple[complex, float]:
    """
    Evaluate ζ(s) together with its estimated absolute error.

    Args:
        s: Complex argument, s != 1.
        profile: Precision profile; config.yaml defaults when None.

    Returns:
        Tuple of (value, error estimate). The estimate is the magnitude of
        the last Euler-Maclaurin correction (scaled by |χ(s)| when reflected).

    Raises:
        PoleAt: at s = 1.
        NonConvergence: when the error estimate stays above tolerance.
    """
    s = complex(s)
    profile = profile or default_profile()
    if s == 1:
        raise PoleAt(s, "zeta has a pole at s = 1")

    if s.real >= profile.reflection_threshold or abs(s) < 0.5:
        return _direct_with_error(s, profile)
    return _reflected_with_error(s, profile)


def riemann_zeta(s: complex, profile: PrecisionProfile | None = None) -> complex:
    """ζ(s) for complex s != 1; see riemann_zeta_with_error."""
    return riemann_zeta_with_error(s, profile)[0]


def riemann_zeta_derivative_with_error(
    s: complex,
    profile: PrecisionProfile | None = None,
) -> tuple[complex, float]:
    """
    Evaluate ζ'(s) for Re(s) >= 0 together with an error estimate.

    Raises:
        PoleAt: at s = 1.
        OutOfDomain: for Re(s) < 0; no reflected derivative is offered.
        NonConvergence: when the estimate stays above 10x the tolerance.
    """
    s = complex(s)
    profile = profile or default_profile()
    if s == 1:
        raise PoleAt(s, "zeta' has a double pole at s = 1")
    if s.real < 0:
        raise OutOfDomain(f"zeta' is only provided for Re(s) >= 0, got {s}")

    tol = 10.0 * profile.target_abs_tol
    N = _em_cutoff(s, profile)
    for _ in range(_MAX_DOUBLINGS + 1):
        value, error = _zeta_derivative_euler_maclaurin(s, N, profile.em_order_M)
        if error <= tol:
            return value, error
        N *= 2
    raise NonConvergence(f"zeta'({s}) error estimate {error:.3e} above {tol:.1e}")


def riemann_zeta_derivative(s: complex, profile: PrecisionProfile | None = None) -> complex:
    """ζ'(s) for Re(s) >= 0, s != 1."""
    return riemann_zeta_derivative_with_error(s, profile)[0]
