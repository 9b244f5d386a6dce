"""
Base-b digits and the digit-sum function d_b(n).

All arithmetic here is exact Python integer arithmetic; arguments are
capped at 2^53 so that every value also fits the float paths elsewhere.
"""

import logging
from dataclasses import dataclass

from digit_dirichlet.errors import InvalidInput

logger = logging.getLogger(__name__)

MAX_ARGUMENT = 2**53


@dataclass(frozen=True)
class IntegerBase:
    """An integer base b >= 2."""

    b: int

    def __post_init__(self) -> None:
        if isinstance(self.b, bool) or not isinstance(self.b, int):
            raise InvalidInput(f"base must be an integer, got {self.b!r}")
        if self.b < 2:
            raise InvalidInput(f"base must be >= 2, got {self.b}")

    def __int__(self) -> int:
        return self.b


def as_base(b: "IntegerBase | int") -> int:
    """Validate and unwrap a base given either as IntegerBase or a plain int."""
    if isinstance(b, IntegerBase):
        return b.b
    return IntegerBase(b).b


def _check_argument(n: int, minimum: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidInput(f"argument must be an integer, got {n!r}")
    if n < minimum:
        raise InvalidInput(f"argument must be >= {minimum}, got {n}")
    if n > MAX_ARGUMENT:
        raise InvalidInput(f"argument {n} exceeds the supported range 2^53")
    return n


@dataclass(frozen=True)
class DigitExpansion:
    """
    Base-b expansion of a positive integer.

    digits[i] is the coefficient of b^i; the last digit is nonzero.
    """

    base: IntegerBase
    digits: tuple[int, ...]
    value: int

    def __post_init__(self) -> None:
        b = self.base.b
        if not self.digits or self.digits[-1] == 0:
            raise InvalidInput("highest digit of an expansion must be nonzero")
        if any(d < 0 or d >= b for d in self.digits):
            raise InvalidInput(f"digits must lie in [0, {b - 1}]")
        if self.evaluate() != self.value:
            raise InvalidInput(f"digits {self.digits} do not evaluate to {self.value}")

    def evaluate(self) -> int:
        """Σ digits[i] b^i (Horner form)."""
        total = 0
        for d in reversed(self.digits):
            total = total * self.base.b + d
        return total

    @property
    def digit_sum(self) -> int:
        return sum(self.digits)

    def __len__(self) -> int:
        return len(self.digits)


def digit_expansion(b: IntegerBase | int, n: int) -> DigitExpansion:
    """
    Return the unique base-b expansion of n.

    Args:
        b: Base (>= 2).
        n: Positive integer.

    Raises:
        InvalidInput: if n < 1 or the base is invalid.
    """
    base = as_base(b)
    n = _check_argument(n, 1)
    digits = []
    rest = n
    while rest:
        rest, d = divmod(rest, base)
        digits.append(d)
    return DigitExpansion(IntegerBase(base), tuple(digits), n)


def digit_sum(b: IntegerBase | int, n: int) -> int:
    """d_b(n), the sum of the base-b digits of n, with d_b(0) = 0."""
    base = as_base(b)
    rest = _check_argument(n, 0)
    total = 0
    while rest:
        rest, d = divmod(rest, base)
        total += d
    return total


def b_adic_valuation(b: IntegerBase | int, n: int) -> int:
    """Largest k with b^k dividing n."""
    base = as_base(b)
    rest = _check_argument(n, 1)
    k = 0
    while rest % base == 0:
        rest //= base
        k += 1
    return k


def differenced_digit_sum(b: IntegerBase | int, n: int) -> int:
    """
    d_b(n) - d_b(n-1) = 1 - k(b-1), where k is the b-adic valuation of n.

    Args:
        b: Base (>= 2).
        n: Positive integer.
    """
    base = as_base(b)
    return 1 - b_adic_valuation(base, n) * (base - 1)


def digit_sum_bound(b: IntegerBase | int, n: int) -> int:
    """(b-1) times the number of base-b digits of n; an upper bound for d_b(n)."""
    base = as_base(b)
    n = _check_argument(n, 1)
    return (base - 1) * len(digit_expansion(base, n))
