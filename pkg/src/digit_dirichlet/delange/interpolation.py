"""
The Delange function h_β and the interpolated digit sums S_β, d_β.

    h_β(x)  = Σ_k c_β(k) e^(2πikx)                      (period 1)
    S_β(n)  = (β-1)/(2 log β) n log n + n h_β(log n / log β)
    d_β(n)  = S_β(n+1) - S_β(n)

At integer β = b these are exactly S_b and d_b (Delange's theorem); the
truncation |k| <= K leaves an error bounded by n Σ_{|k|>K} |c_β(k)|.
"""

import logging

import numpy as np

from digit_dirichlet.delange.coefficients import BetaParam, as_beta, delange_coefficients, tail_bound
from digit_dirichlet.errors import InvalidInput, SymmetryViolation
from digit_dirichlet.precision_config import FourierTruncation, PrecisionProfile

logger = logging.getLogger(__name__)

REALNESS_TOLERANCE = 1e-10
_CHUNK = 1024


def fourier_sum(coefficients: np.ndarray, x: np.ndarray) -> np.ndarray:
    """
    Real part of Σ_{|k|<=K} c_k e^(2πikx), pairing +k with -k.

    Raises:
        SymmetryViolation: if any imaginary residue reaches 1e-10.
    """
    K = (len(coefficients) - 1) // 2
    positive = coefficients[K + 1 :]
    negative = coefficients[K - 1 :: -1]
    k = np.arange(1, K + 1)
    x = np.asarray(x, dtype=float)
    frac = x - np.floor(x)
    out = np.empty(frac.shape, dtype=float)
    flat_in, flat_out = frac.ravel(), out.ravel()
    worst = 0.0
    for start in range(0, len(flat_in), _CHUNK):
        chunk = flat_in[start : start + _CHUNK]
        phase = np.exp(2j * np.pi * np.outer(chunk, k))
        total = coefficients[K] + (phase * positive + phase.conj() * negative).sum(axis=1)
        worst = max(worst, float(np.max(np.abs(total.imag), initial=0.0)))
        flat_out[start : start + _CHUNK] = total.real
    if worst >= REALNESS_TOLERANCE:
        raise SymmetryViolation(f"imaginary residue {worst:.3e} in a Delange sum with K={K}")
    return flat_out.reshape(frac.shape)


def h_beta(
    beta: BetaParam | float,
    x: float | np.ndarray,
    trunc: FourierTruncation | None = None,
    profile: PrecisionProfile | None = None,
) -> float | np.ndarray:
    """
    The truncated Delange function h_β at x (scalar or array).

    Args:
        beta: β > 1.
        x: Real point(s); h_β has period 1.
        trunc: Fourier cutoff; the configured default when None.
        profile: Precision profile for the coefficients.

    Raises:
        SymmetryViolation: if the symmetric sum is not real to 1e-10.
    """
    coefficients = delange_coefficients(beta, trunc, profile)
    values = fourier_sum(coefficients, np.asarray(x, dtype=float))
    return float(values) if np.ndim(x) == 0 else values


def h_beta_tail_bound(
    beta: BetaParam | float,
    trunc: FourierTruncation | None = None,
    profile: PrecisionProfile | None = None,
) -> float:
    """Estimated Σ_{|k|>K} |c_β(k)|, from the k^-3/2 envelope of the computed coefficients."""
    return tail_bound(delange_coefficients(beta, trunc, profile))


def _check_n(n: int | np.ndarray) -> np.ndarray:
    arr = np.asarray(n)
    if not np.issubdtype(arr.dtype, np.integer):
        raise InvalidInput(f"n must be integral, got {n!r}")
    if np.any(arr < 1):
        raise InvalidInput("n must be >= 1")
    return arr.astype(float)


def s_beta_with_bound(
    beta: BetaParam | float,
    n: int | np.ndarray,
    trunc: FourierTruncation | None = None,
    profile: PrecisionProfile | None = None,
) -> tuple[float | np.ndarray, float | np.ndarray]:
    """S_β(n) together with its truncation bound n Σ_{|k|>K} |c_β(k)|."""
    p = as_beta(beta)
    nf = _check_n(n)
    coefficients = delange_coefficients(p, trunc, profile)
    log_n = np.log(nf)
    values = p.leading * nf * log_n + nf * fourier_sum(coefficients, log_n / p.log)
    bounds = nf * tail_bound(coefficients)
    if np.ndim(n) == 0:
        return float(values), float(bounds)
    return values, bounds


def s_beta(
    beta: BetaParam | float,
    n: int | np.ndarray,
    trunc: FourierTruncation | None = None,
    profile: PrecisionProfile | None = None,
) -> float | np.ndarray:
    """
    The interpolated cumulative digit sum S_β(n).

    Args:
        beta: β > 1.
        n: Positive integer or integer array.
        trunc: Fourier cutoff; the configured default when None.
    """
    return s_beta_with_bound(beta, n, trunc, profile)[0]


def d_beta(
    beta: BetaParam | float,
    n: int | np.ndarray,
    trunc: FourierTruncation | None = None,
    profile: PrecisionProfile | None = None,
) -> float | np.ndarray:
    """d_β(n) = S_β(n+1) - S_β(n) at a common truncation."""
    arr = np.asarray(n)
    return s_beta(beta, arr + 1, trunc, profile) - s_beta(beta, arr, trunc, profile)


def d_beta_sign_changes(
    beta: BetaParam | float,
    n_max: int,
    trunc: FourierTruncation | None = None,
    profile: PrecisionProfile | None = None,
) -> list[int]:
    """
    The n in 1..n_max-1 with d_β(n) and d_β(n+1) of opposite sign.

    Observations only: nothing about the sign of d_β is asserted.
    """
    if n_max < 2:
        raise InvalidInput(f"n_max must be >= 2, got {n_max}")
    values = d_beta(beta, np.arange(1, n_max + 1), trunc, profile)
    signs = np.sign(values)
    changes = np.nonzero(signs[:-1] * signs[1:] < 0)[0] + 1
    logger.info(f"d_beta for beta={as_beta(beta).beta}: {len(changes)} sign changes up to n={n_max}")
    return [int(c) for c in changes]
