"""
Exact Bernoulli numbers.

Convention: x/(e^x - 1) = Σ B_k x^k / k!, so B_1 = -1/2. Every expansion in
the package uses this convention; the F_b expansion picks up (-1)^k B_k.
"""

import logging
import threading
from fractions import Fraction
from math import comb, factorial

from digit_dirichlet.errors import InvalidInput

logger = logging.getLogger(__name__)

_cache: list[Fraction] = [Fraction(1)]
_lock = threading.Lock()


def bernoulli_number(k: int) -> Fraction:
    """
    Return the exact Bernoulli number B_k.

    Solves Σ_{j=0}^{k} C(k+1, j) B_j = 0 in rationals and caches every
    value computed on the way.

    Args:
        k: Nonnegative index.

    Returns:
        B_k as a reduced Fraction (positive denominator).
    """
    if k < 0:
        raise InvalidInput(f"Bernoulli index must be nonnegative, got {k}")
    if k >= 3 and k % 2 == 1:
        return Fraction(0)

    with _lock:
        while len(_cache) <= k:
            n = len(_cache)
            if n >= 3 and n % 2 == 1:
                _cache.append(Fraction(0))
                continue
            total = sum(
                (comb(n + 1, j) * _cache[j] for j in range(n)),
                start=Fraction(0),
            )
            _cache.append(-total / (n + 1))
        return _cache[k]


def bernoulli_over_factorial(k: int) -> float:
    """B_k / k! as a float, formed exactly before rounding."""
    return float(bernoulli_number(k) / factorial(k))


def bernoulli_float_table(n: int) -> list[float]:
    """Floats B_k / k! for k = 0..n."""
    return [bernoulli_over_factorial(k) for k in range(n + 1)]
