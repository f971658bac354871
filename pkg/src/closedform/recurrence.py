from dataclasses import dataclass
from typing import Optional, Sequence

from src.error import DiscriminantError
from src.exact.combinatorics import binom
from src.exact.gaussian import ZERO, GaussianLike, GaussianRational
from src.poly.polynomial import Polynomial


class RecurrentSequence:
    """
    The sequence ``t_r`` attached to a divisor ``q = b_m x^m - b_(m-1) x^(m-1) - ... - b_0``:
    ``t_1 = 1 / b_m`` and ``t_r = (1 / b_m) * sum_{i=1}^{r-1} b_(m-i) t_(r-i)`` where
    ``b_j = 0`` for ``j < 0``. Values are memoized on first access.

    :param divisor: ``(b_m, b_(m-1), ..., b_0)``
    """

    def __init__(self, divisor: Sequence[GaussianLike]):
        coeffs = tuple(GaussianRational.coerce(item) for item in divisor)
        if not coeffs or coeffs[0].is_zero():
            raise DiscriminantError.precondition_failed("remainder sequence", "b_m != 0")
        self._divisor = coeffs
        self._inverse_lead = coeffs[0].inverse()
        self._memo: list[GaussianRational] = []

    @property
    def m(self) -> int:
        return len(self._divisor) - 1

    @property
    def divisor(self) -> tuple[GaussianRational, ...]:
        return self._divisor

    def __getitem__(self, r: int) -> GaussianRational:
        if r < 1:
            raise IndexError("the sequence starts at r = 1")
        while len(self._memo) < r:
            self._extend()
        return self._memo[r - 1]

    def _extend(self) -> None:
        r = len(self._memo) + 1
        if r == 1:
            self._memo.append(self._inverse_lead)
            return
        total = ZERO
        for i in range(1, min(r - 1, self.m) + 1):
            coeff = self._divisor[i]
            if not coeff.is_zero():
                total = total + coeff * self._memo[r - i - 1]
        self._memo.append(total * self._inverse_lead)


@dataclass(frozen=True)
class TrParams:
    """Divisor ``q = b3 x^3 - b1 x - b0`` (no quadratic term)."""

    b3: GaussianRational
    b1: GaussianRational
    b0: GaussianRational

    def __post_init__(self):
        for name in ("b3", "b1", "b0"):
            object.__setattr__(self, name, GaussianRational.coerce(getattr(self, name)))
        if self.b3.is_zero():
            raise DiscriminantError.precondition_failed("t_r sequence", "b3 != 0")

    @property
    def divisor(self) -> tuple[GaussianRational, ...]:
        return self.b3, ZERO, self.b1, self.b0


class TrSequence(RecurrentSequence):
    """``t_1 = 1/b3``, ``t_2 = 0``, ``t_3 = b1/b3^2``, ``t_r = (b1 t_(r-2) + b0 t_(r-3)) / b3``."""

    def __init__(self, params: TrParams):
        super().__init__(params.divisor)
        self._params = params

    @property
    def params(self) -> TrParams:
        return self._params


def tr_recurrence(params: TrParams, r: int) -> GaussianRational:
    return TrSequence(params)[r]


def tr_closed(params: TrParams, r: int) -> GaussianRational:
    """
    Closed form of ``t_r`` for the divisor ``b3 x^3 - b1 x - b0``.

    odd r:  ``b3^(-ceil(r/2)) * sum_{k=0}^{floor(r/6)} C(h-k, h-3k) b0^(2k) b1^(h-3k) b3^k``
    with ``h = floor(r/2)``

    even r: ``b3^(-r/2) * sum_{k=1}^{floor((r+2)/6)} C(h-k, h-3k+1) b0^(2k-1) b1^(h-3k+1) b3^(k-1)``
    with ``h = r/2``
    """
    if r < 1:
        raise ValueError("'r' must be positive")
    b3, b1, b0 = params.b3, params.b1, params.b0
    half = r // 2
    total = ZERO
    if r % 2:
        for k in range(r // 6 + 1):
            total = total + (
                b0 ** (2 * k) * b1 ** (half - 3 * k) * b3**k * binom(half - k, half - 3 * k)
            )
        return total * b3 ** -(r - half)
    for k in range(1, (r + 2) // 6 + 1):
        total = total + (
            b0 ** (2 * k - 1)
            * b1 ** (half - 3 * k + 1)
            * b3 ** (k - 1)
            * binom(half - k, half - 3 * k + 1)
        )
    return total * b3**-half


def divisor_polynomial(divisor: Sequence[GaussianLike]) -> Polynomial:
    """``b_m x^m - b_(m-1) x^(m-1) - ... - b_0`` from ``(b_m, ..., b_0)``."""
    coeffs = [GaussianRational.coerce(item) for item in divisor]
    m = len(coeffs) - 1
    return Polynomial.from_terms(
        {m - i: (coeff if i == 0 else -coeff) for i, coeff in enumerate(coeffs)}
    )


def generalized_remainder(
    p: Polynomial, divisor: Sequence[GaussianLike], m: Optional[int] = None
) -> Polynomial:
    """
    Remainder of ``p`` (degree n) by ``q = b_m x^m - b_(m-1) x^(m-1) - ... - b_0`` without
    long division::

        r_k = a_k + sum_{i=0}^{k} b_i sum_{v=0}^{n-m-k+i} t_(n-m-k+i+1-v) a_(n-v),  k < m

    with ``t`` the recurrent sequence of ``q`` (``t_1 = 1/b_m`` already carries the
    normalization by the leading coefficient).
    """
    sequence = RecurrentSequence(divisor)
    b_desc = sequence.divisor
    if m is None:
        m = sequence.m
    elif m != sequence.m:
        raise ValueError(f"divisor has degree {sequence.m}, not {m}")
    if p.is_zero() or int(p.degree) < m:
        raise DiscriminantError.precondition_failed("generalized remainder", "deg p >= m")
    n = int(p.degree)
    b = b_desc[::-1]  # b[i] is b_i

    remainder = []
    for k in range(m):
        value = p.coeff(k)
        for i in range(k + 1):
            if b[i].is_zero():
                continue
            inner = ZERO
            top = n - m - k + i
            for v in range(top + 1):
                coeff = p.coeff(n - v)
                if not coeff.is_zero():
                    inner = inner + sequence[top + 1 - v] * coeff
            value = value + b[i] * inner
        remainder.append(value)
    return Polynomial(remainder)
