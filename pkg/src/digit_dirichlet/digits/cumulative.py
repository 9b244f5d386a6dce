"""
Cumulative digit sums S_b(n) = Σ_{m=1}^{n-1} d_b(m).

Vectorized tables (d_b and S_b over 0..N) are kept per base as numpy int64
arrays that only grow; they back the brute-force Dirichlet oracles. Single
values beyond the cached range come from an exact digit-by-digit formula.
"""

import logging
import threading

import numpy as np

from digit_dirichlet.digits.expansion import _check_argument, as_base, digit_expansion

logger = logging.getLogger(__name__)

_prefix_cache: dict[int, np.ndarray] = {}
_prefix_lock = threading.Lock()


def digit_sum_array(b: int, N: int) -> np.ndarray:
    """d_b(n) for n = 0..N as an int64 array."""
    base = as_base(b)
    _check_argument(N, 0)
    rest = np.arange(N + 1, dtype=np.int64)
    total = np.zeros(N + 1, dtype=np.int64)
    while rest.any():
        total += rest % base
        rest //= base
    return total


def cumulative_digit_sums(b: int, N: int) -> np.ndarray:
    """
    S_b(n) for n = 0..N as a read-only int64 array (S_b(0) = S_b(1) = 0).

    The per-base table is extended by doubling under a lock and shared
    between callers.
    """
    base = as_base(b)
    _check_argument(N, 0)
    table = _prefix_cache.get(base)
    if table is None or len(table) <= N:
        with _prefix_lock:
            table = _prefix_cache.get(base)
            if table is None or len(table) <= N:
                size = max(N + 1, 2 * (len(table) if table is not None else 0), 1024)
                digits = digit_sum_array(base, size - 1)
                table = np.zeros(size, dtype=np.int64)
                np.cumsum(digits[:-1], out=table[1:])
                table.setflags(write=False)
                _prefix_cache[base] = table
                logger.debug(f"S_{base} prefix table extended to {size} entries")
    return table[: N + 1]


def _cumulative_by_digits(base: int, n: int) -> int:
    """Exact S_b(n) in O(log n) by fixing digits from the top."""
    digits = digit_expansion(base, n).digits
    total = 0
    fixed = 0
    for i in range(len(digits) - 1, -1, -1):
        d = digits[i]
        block = base**i
        # d blocks of b^i numbers each; lower digits run over all strings of length i
        total += block * (d * fixed + d * (d - 1) // 2) + d * i * (base - 1) * block // 2
        fixed += d
    return total


def cumulative_digit_sum(b: int, n: int) -> int:
    """
    S_b(n) = Σ_{m=1}^{n-1} d_b(m), exact.

    Args:
        b: Base (>= 2).
        n: Positive integer; S_b(1) = 0.
    """
    base = as_base(b)
    n = _check_argument(n, 1)
    table = _prefix_cache.get(base)
    if table is not None and n < len(table):
        return int(table[n])
    return _cumulative_by_digits(base, n)
