"""
Precomputed S_β(1..N_max) tables feeding the F_β remainder integral.

A table is immutable once built. It also memoizes the power series
P(x) = Σ_{n=2}^{N_max} S_β(n) e^-nx on quadrature node arrays, since the
same nodes recur for every s on a contour.
"""

import logging
import math
import threading
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from cachetools import LRUCache, cached

from digit_dirichlet.delange.coefficients import BetaParam, as_beta, delange_coefficients, tail_bound
from digit_dirichlet.delange.interpolation import fourier_sum
from digit_dirichlet.errors import InvalidInput
from digit_dirichlet.precision_config import FourierTruncation, get_numeric_config

logger = logging.getLogger(__name__)

MIN_TABLE_SIZE = 100
GROWTH_SAFETY = 1.2
_CHUNK = 8192
_UNDERFLOW = 745.0


@dataclass(frozen=True, eq=False)
class SbetaTable:
    """
    Values S_β(n) for n = 1..N_max at a fixed Fourier cutoff.

    values[n] holds S_β(n); values[0] is unused.
    """

    beta: BetaParam
    truncation: FourierTruncation
    values: np.ndarray
    coefficient_tail: float
    _memo: LRUCache = field(default_factory=lambda: LRUCache(maxsize=128), repr=False)
    _memo_lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def N_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> float:
        if not 1 <= n <= self.N_max:
            raise IndexError(f"S_beta table covers 1..{self.N_max}, got {n}")
        return float(self.values[n])

    @cached_property
    def growth_constant(self) -> float:
        """C_β = 1.2 max_{2<=n<=N_max} |S_β(n)| / (n log n)."""
        n = np.arange(2, self.N_max + 1, dtype=float)
        return GROWTH_SAFETY * float(np.max(np.abs(self.values[2:]) / (n * np.log(n))))

    def truncation_bound(self, n: int | np.ndarray) -> float | np.ndarray:
        """n Σ_{|k|>K} |c_β(k)|, the Fourier-truncation bound on table[n]."""
        return np.asarray(n, dtype=float) * self.coefficient_tail

    def series_tail(self, N: int, x: float) -> float:
        """Bound on Σ_{n>N} |S_β(n)| e^-nx from S_β(n) <= C_β n log n (inf if not geometric)."""
        ratio = (1.0 + 2.0 / N) * math.exp(-x)
        if ratio >= 1.0:
            return math.inf
        first = self.growth_constant * (N + 1) * math.log(N + 1) * math.exp(-(N + 1) * x)
        return first / (1.0 - ratio)

    def power_series(self, x: np.ndarray, shift: int = 0) -> np.ndarray:
        """
        Σ_{n=2}^{N_max} S_β(n) e^-(n-shift)x for an array of x > 0.

        shift = 1 gives e^x P(x) without overflowing for large x.
        """
        x = np.asarray(x, dtype=float)
        key = (x.tobytes(), shift)
        with self._memo_lock:
            hit = self._memo.get(key)
        if hit is not None:
            return hit
        total = np.zeros_like(x)
        smallest = float(np.min(x)) if x.size else 1.0
        last = min(self.N_max, int(_UNDERFLOW / smallest) + 2)
        for start in range(2, last + 1, _CHUNK):
            n = np.arange(start, min(start + _CHUNK, last + 1), dtype=float)
            total += np.exp(-np.outer(x, n - shift)) @ self.values[start : start + len(n)]
        total.setflags(write=False)
        with self._memo_lock:
            self._memo[key] = total
        return total


_tables: LRUCache = LRUCache(maxsize=4)
_tables_lock = threading.Lock()


@cached(_tables, key=lambda beta, N_max, cutoff: (beta, N_max, cutoff), lock=_tables_lock)
def _build(beta: float, N_max: int, cutoff: int) -> SbetaTable:
    p = BetaParam(beta)
    trunc = FourierTruncation(cutoff)
    coefficients = delange_coefficients(p, trunc)
    n = np.arange(1, N_max + 1, dtype=float)
    log_n = np.log(n)
    values = np.zeros(N_max + 1)
    values[1:] = p.leading * n * log_n + n * fourier_sum(coefficients, log_n / p.log)
    values.setflags(write=False)
    logger.info(f"built S_beta table for beta={beta}, N_max={N_max}, K={cutoff}")
    return SbetaTable(p, trunc, values, tail_bound(coefficients))


def build_sbeta_table(
    beta: BetaParam | float,
    N_max: int | None = None,
    trunc: FourierTruncation | None = None,
) -> SbetaTable:
    """
    Build (or fetch from the small table cache) S_β(1..N_max).

    Args:
        beta: β > 1.
        N_max: Table length (>= 100); config.yaml's table_size when None.
        trunc: Fourier cutoff; the configured default when None.

    Raises:
        InvalidInput: if N_max < 100.
    """
    config = get_numeric_config()
    p = as_beta(beta)
    N_max = config.beta_series.table_size if N_max is None else N_max
    if N_max < MIN_TABLE_SIZE:
        raise InvalidInput(f"N_max must be >= {MIN_TABLE_SIZE}, got {N_max}")
    trunc = trunc or config.truncation
    return _build(p.beta, int(N_max), trunc.cutoff_K)
