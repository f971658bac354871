from fractions import Fraction
from math import comb
from typing import Callable, Iterator, Optional


def binom(n: int, k: int) -> int:
    """
    Binomial coefficient C(n, k), taken as 0 whenever ``k < 0``, ``k > n`` or ``n < 0``.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def sign_pow(e: int) -> int:
    """(-1) ** e read off the parity of ``e``."""
    return -1 if e & 1 else 1


def even_binomial_ratios(
    s: int,
    weight: Optional[Callable[[int], Fraction]] = None,
) -> Iterator[Fraction]:
    """
    Yields ``w(i) / w(i - 1)`` for ``i = 1 .. s // 2``, where
    ``w(i) = C(s, 2i) * weight(i)``. Weights must not vanish on ``0 .. s // 2``.
    """
    previous = weight(0) if weight is not None else Fraction(1)
    for i in range(1, s // 2 + 1):
        ratio = Fraction((s - 2 * i + 2) * (s - 2 * i + 1), (2 * i - 1) * (2 * i))
        if weight is not None:
            current = weight(i)
            ratio *= current / previous
            previous = current
        yield ratio
