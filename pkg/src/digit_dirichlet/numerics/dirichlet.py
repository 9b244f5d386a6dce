"""
Direct summation of Dirichlet series with explicit tail bounds.

These are the brute-force oracles: Σ_{n<=N} a_n n^(-s) in ascending n,
compensated, with the tail Σ_{n>N} |a_n| n^(-Re s) bounded by a caller
supplied function.
"""

import logging
import math
from collections.abc import Callable, Sequence

import numpy as np

from digit_dirichlet.errors import InvalidInput, OutOfDomain
from digit_dirichlet.numerics.results import EvalResult

logger = logging.getLogger(__name__)

Coefficients = Callable[[np.ndarray], np.ndarray] | Sequence[float] | np.ndarray
TailBound = Callable[[int], float]


def _coefficient_array(coeff: Coefficients, N: int) -> np.ndarray:
    if callable(coeff):
        values = np.asarray(coeff(np.arange(1, N + 1)), dtype=float)
    else:
        values = np.asarray(coeff, dtype=float)
        if len(values) < N:
            raise InvalidInput(f"{len(values)} coefficients supplied, {N} needed")
        values = values[:N]
    if values.shape != (N,):
        raise InvalidInput(f"coefficient array has shape {values.shape}, expected ({N},)")
    return values


def direct_dirichlet_sum(
    coeff: Coefficients,
    s: complex,
    N: int,
    tail_bound: TailBound,
    sigma_a: float,
) -> EvalResult:
    """
    Σ_{n=1}^{N} coeff(n) n^(-s) with the tail bound as error estimate.

    Args:
        coeff: Either a vectorized function of n = 1..N or an array whose
            entry n-1 is the n-th coefficient.
        s: Argument.
        N: Number of terms.
        tail_bound: Rigorous bound on Σ_{n>N} |coeff(n)| n^(-Re s).
        sigma_a: Abscissa of absolute convergence of the series.

    Raises:
        OutOfDomain: unless Re(s) > sigma_a.
    """
    s = complex(s)
    margin = s.real - sigma_a
    if margin <= 0:
        raise OutOfDomain(f"Re(s) = {s.real} is not right of the abscissa {sigma_a}")
    if N < 1:
        raise InvalidInput(f"N must be positive, got {N}")

    a = _coefficient_array(coeff, N)
    terms = a * np.exp(-s * np.log(np.arange(1, N + 1, dtype=float)))
    value = complex(math.fsum(terms.real), math.fsum(terms.imag))
    tail = float(tail_bound(N))
    logger.debug(f"direct sum at s={s} with N={N}: tail bound {tail:.3e}")
    return EvalResult.exact(value, tail, N=N, margin=margin)


def log_envelope_tail(N: int, sigma: float, scale: float, log_base: float) -> float:
    """
    ∫_N^∞ scale (log x / log_base + 1) x^(-sigma) dx, for sigma > 1.

    Bounds Σ_{n>N} of any |a_n| <= scale (log_b n + 1) times n^(-sigma),
    since the envelope decreases for x >= N >= 3.
    """
    if sigma <= 1.0:
        raise OutOfDomain(f"tail integral diverges for sigma = {sigma}")
    d = sigma - 1.0
    power = N ** (-d)
    return scale * (power * (math.log(N) / log_base + 1.0) / d + power / (d * d * log_base))


def power_tail(N: int, sigma: float) -> float:
    """∫_N^∞ x^(-sigma) dx, bounding Σ_{n>N} n^(-sigma)."""
    if sigma <= 1.0:
        raise OutOfDomain(f"tail integral diverges for sigma = {sigma}")
    return N ** (1.0 - sigma) / (sigma - 1.0)
