"""
Laurent coefficients by the trapezoid rule on a circle.

For f analytic on a punctured disc around c,

    a_{-j} = (1/2πi) ∮ f(s) (s-c)^(j-1) ds = (1/n) Σ_k f(c + r ω_k) (r ω_k)^j

with ω_k the n-th roots of unity. The rule converges geometrically, so a
doubling of the node count is used as the convergence check; the doubled
grid reuses every node of the original one.
"""

import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from digit_dirichlet.config import settings
from digit_dirichlet.errors import NonConvergence
from digit_dirichlet.numerics.results import ContourSpec

logger = logging.getLogger(__name__)

ComplexFunction = Callable[[complex], complex]

DOUBLING_TOLERANCE = 1e-8


def _evaluate(f: ComplexFunction, points: np.ndarray) -> np.ndarray:
    if settings.threads > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=settings.threads) as pool:
            values = list(pool.map(f, points))
    else:
        values = [f(p) for p in points]
    return np.array(values, dtype=complex)


def _offsets(spec: ContourSpec, n: int, start: int = 0, step: int = 1) -> np.ndarray:
    k = np.arange(start, n, step)
    return spec.radius * np.exp(2j * np.pi * k / n)


def _coefficients(values: np.ndarray, offsets: np.ndarray, orders: Iterable[int]) -> dict[int, complex]:
    return {j: complex(np.mean(values * offsets**j)) for j in orders}


def laurent_coefficients(
    f: ComplexFunction,
    spec: ContourSpec,
    orders: Iterable[int],
    tolerance: float = DOUBLING_TOLERANCE,
) -> dict[int, complex]:
    """
    Several Laurent coefficients a_{-j} from one set of samples.

    Args:
        f: Function analytic on the circle and inside it except at the center.
        spec: Circle and base node count.
        orders: Values of j; j = 1 is the residue, j <= 0 gives the regular
            coefficients a_0, a_1, ...
        tolerance: Largest allowed change under node doubling.

    Returns:
        Mapping j -> a_{-j}, from the doubled grid.

    Raises:
        NonConvergence: if doubling the nodes moves any coefficient by more
            than tolerance.
    """
    orders = list(orders)
    n = spec.node_count
    coarse_offsets = _offsets(spec, n)
    coarse_values = _evaluate(f, spec.center + coarse_offsets)

    fine_n = 2 * n
    odd_offsets = _offsets(spec, fine_n, start=1, step=2)
    odd_values = _evaluate(f, spec.center + odd_offsets)

    fine_offsets = np.empty(fine_n, dtype=complex)
    fine_values = np.empty(fine_n, dtype=complex)
    fine_offsets[0::2], fine_offsets[1::2] = coarse_offsets, odd_offsets
    fine_values[0::2], fine_values[1::2] = coarse_values, odd_values

    coarse = _coefficients(coarse_values, coarse_offsets, orders)
    fine = _coefficients(fine_values, fine_offsets, orders)
    for j in orders:
        change = abs(fine[j] - coarse[j])
        if change > tolerance:
            raise NonConvergence(
                f"a_{{-{j}}} around {spec.center} moved by {change:.3e} when doubling {n} nodes"
            )
    logger.debug(f"Laurent coefficients {orders} around {spec.center} with r={spec.radius}, n={fine_n}")
    return fine


def laurent_coefficient(
    f: ComplexFunction,
    spec: ContourSpec,
    j: int = 1,
    tolerance: float = DOUBLING_TOLERANCE,
) -> complex:
    """a_{-j} of f at spec.center; j = 1 gives the residue."""
    return laurent_coefficients(f, spec, [j], tolerance)[j]
