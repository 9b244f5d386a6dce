"""
Fourier coefficients of the Delange function h_β.

    c_β(0) = (β-1)/(2 log β) (log 2π - 1) - (β+1)/4
    c_β(k) = -(β-1)/(2πik) (1 + 2πik/log β)^-1 ζ(2πik/log β),   k != 0

Whole coefficient vectors c_β(-K..K) are cached per (β, K); negative
indices are evaluated from the formula, not by conjugation, so the realness
check on h_β has something to check.
"""

import logging
import math
import threading
from dataclasses import dataclass

import numpy as np
from cachetools import LRUCache, cached

from digit_dirichlet.errors import InvalidInput
from digit_dirichlet.precision_config import FourierTruncation, PrecisionProfile, default_profile, get_numeric_config
from digit_dirichlet.special.zeta import riemann_zeta

logger = logging.getLogger(__name__)

BETA_GUARD = 1e-6
ENVELOPE_EXPONENT = 1.4
ENVELOPE_FIT_UPTO = 10
ENVELOPE_SLACK = 2.0


@dataclass(frozen=True)
class BetaParam:
    """A real base β > 1 (refused within 1e-6 of 1)."""

    beta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.beta) or self.beta < 1.0 + BETA_GUARD:
            raise InvalidInput(f"beta must be > 1 + {BETA_GUARD:g}, got {self.beta}")

    @property
    def log(self) -> float:
        return math.log(self.beta)

    @property
    def tau(self) -> float:
        """2π / log β."""
        return 2.0 * math.pi / self.log

    @property
    def leading(self) -> float:
        """a = (β-1)/(2 log β), the n log n coefficient of S_β."""
        return (self.beta - 1.0) / (2.0 * self.log)


def as_beta(beta: "BetaParam | float") -> BetaParam:
    return beta if isinstance(beta, BetaParam) else BetaParam(float(beta))


@dataclass(frozen=True)
class DelangeCoefficient:
    """One Fourier coefficient c_β(k)."""

    k: int
    value: complex


def constant_coefficient(beta: "BetaParam | float") -> float:
    """c_β(0), which is real."""
    p = as_beta(beta)
    return p.leading * (math.log(2.0 * math.pi) - 1.0) - (p.beta + 1.0) / 4.0


def _coefficient(p: BetaParam, k: int, profile: PrecisionProfile) -> complex:
    if k == 0:
        return complex(constant_coefficient(p))
    w = 1j * p.tau * k
    return -(p.beta - 1.0) / (2j * math.pi * k) / (1.0 + w) * riemann_zeta(w, profile)


def delange_coefficient(beta: "BetaParam | float", k: int, profile: PrecisionProfile | None = None) -> DelangeCoefficient:
    """
    c_β(k) from its closed form.

    Raises:
        InvalidInput: for β too close to 1.
        NonConvergence: from ζ on the imaginary axis.
    """
    p = as_beta(beta)
    return DelangeCoefficient(k, _coefficient(p, int(k), profile or default_profile()))


_cache: LRUCache = LRUCache(maxsize=64)
_cache_lock = threading.Lock()


@cached(_cache, key=lambda beta, cutoff, profile: (beta, cutoff, profile), lock=_cache_lock)
def _coefficient_vector(beta: float, cutoff: int, profile: PrecisionProfile) -> np.ndarray:
    p = BetaParam(beta)
    values = np.array([_coefficient(p, k, profile) for k in range(-cutoff, cutoff + 1)], dtype=complex)
    values.setflags(write=False)
    logger.debug(f"computed {len(values)} Delange coefficients for beta={beta}")
    return values


def delange_coefficients(
    beta: "BetaParam | float",
    trunc: FourierTruncation | None = None,
    profile: PrecisionProfile | None = None,
) -> np.ndarray:
    """
    Read-only array of c_β(k) for k = -K..K; index k + K holds c_β(k).

    Args:
        beta: β > 1.
        trunc: Fourier cutoff K; the configured default when None.
        profile: Precision profile for ζ.
    """
    p = as_beta(beta)
    trunc = trunc or get_numeric_config().truncation
    return _coefficient_vector(p.beta, trunc.cutoff_K, profile or default_profile())


def decay_constant(coefficients: np.ndarray, exponent: float = 1.5) -> float:
    """
    C with |c_β(k)| <= C k^-exponent over the last decade of computed k.

    Args:
        coefficients: Array for k = -K..K.
        exponent: Decay exponent of the envelope.
    """
    K = (len(coefficients) - 1) // 2
    k = np.arange(max(1, K // 10), K + 1)
    positive = np.abs(coefficients[K + k])
    negative = np.abs(coefficients[K - k])
    return float(np.max(np.maximum(positive, negative) * k**exponent))


def fitted_envelope(
    coefficients: np.ndarray,
    exponent: float = ENVELOPE_EXPONENT,
    fit_upto: int = ENVELOPE_FIT_UPTO,
) -> float:
    """
    C = max over 1 <= k <= fit_upto of |c_β(±k)| k^exponent.

    Beyond the fit range |c_β(k)| follows k^-3/2 |ζ(1 + iτk)|, so the ζ
    factor can lift single coefficients above C k^-exponent; the bound is
    ENVELOPE_SLACK times C (see envelope_violations).
    """
    K = (len(coefficients) - 1) // 2
    if K < fit_upto:
        raise InvalidInput(f"envelope fit needs K >= {fit_upto}, got K = {K}")
    k = np.arange(1, fit_upto + 1)
    magnitude = np.maximum(np.abs(coefficients[K + k]), np.abs(coefficients[K - k]))
    return float(np.max(magnitude * k**exponent))


def envelope_violations(
    coefficients: np.ndarray,
    exponent: float = ENVELOPE_EXPONENT,
    slack: float = ENVELOPE_SLACK,
) -> list[int]:
    """The k > 0 with max(|c_β(k)|, |c_β(-k)|) > slack C k^-exponent."""
    K = (len(coefficients) - 1) // 2
    C = fitted_envelope(coefficients, exponent)
    k = np.arange(1, K + 1)
    magnitude = np.maximum(np.abs(coefficients[K + k]), np.abs(coefficients[K - k]))
    bad = k[magnitude > slack * C * k ** (-exponent)]
    if len(bad):
        logger.warning(f"{len(bad)} coefficients above {slack:g} C k^-{exponent:g}, first at k = {int(bad[0])}")
    return [int(x) for x in bad]


def tail_bound(coefficients: np.ndarray) -> float:
    """Σ_{|k|>K} |c_β(k)| estimated by the fitted k^-3/2 envelope: 2 C ∫_K^∞ x^-3/2 dx."""
    K = (len(coefficients) - 1) // 2
    return 4.0 * decay_constant(coefficients) / math.sqrt(K)
