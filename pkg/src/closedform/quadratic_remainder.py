"""
Closed forms for quadrinomials whose derivative leaves a quadratic remainder.

Each formula is written in the elementary symmetric functions ``e1 = z1 + z2`` and
``e2 = z1 z2`` of the remainder's roots; the roots themselves are never formed. Power sums
``z1^s + z2^s`` are twice a binomial power sum in ``h = e1 / 2`` and ``d = h^2 - e2``.
"""

from dataclasses import dataclass
from fractions import Fraction

from typing_extensions import Self

from src.closedform.series import binomial_power_sum
from src.constants import Family, Method
from src.error import DiscriminantError
from src.exact.combinatorics import binom, sign_pow
from src.exact.gaussian import ZERO, GaussianLike, GaussianRational
from src.poly.quadrinomial import QuadrinomialSpec
from src.resultant.discriminant import DiscriminantResult


@dataclass(frozen=True)
class FormulaContext:
    e1: GaussianRational
    e2: GaussianRational

    @classmethod
    def from_remainder(
        cls, r2: GaussianRational, r1: GaussianRational, r0: GaussianRational
    ) -> Self:
        """Symmetric functions of the roots of ``r2 x^2 + r1 x + r0``."""
        if r2.is_zero():
            raise DiscriminantError.zero_divisor("leading coefficient of the quadratic remainder")
        return cls(e1=-r1 / r2, e2=r0 / r2)

    @classmethod
    def for_k2(cls, n: int, a: GaussianRational, b: GaussianRational, c: GaussianRational):
        # n f - x f' = (n-2) a x^2 + (n-1) b x + n c
        return cls.from_remainder(a * (n - 2), b * (n - 1), c * n)

    @classmethod
    def for_k_nm1(cls, n: int, a: GaussianRational, b: GaussianRational, c: GaussianRational):
        return cls.from_remainder(b * (n - 1), a * b * (n - 2) + c * n, a * c * (n - 1))

    @property
    def h(self) -> GaussianRational:
        return self.e1 / 2

    @property
    def d(self) -> GaussianRational:
        h = self.h
        return h * h - self.e2

    def power_sum_half(self, s: int) -> GaussianRational:
        """``(z1^s + z2^s) / 2``"""
        return binomial_power_sum(s, self.h, self.d)

    def shifted_power_sum_half(self, s: int) -> GaussianRational:
        """
        ``sum_i C(s, 2i) (s+1)/(s+1-2i) h^(s-2i) d^i``, so that
        ``z1^(s+1) + z2^(s+1) = e1 * shifted_power_sum_half(s) + [s odd] 2 d^((s+1)/2)``.
        """
        return binomial_power_sum(
            s, self.h, self.d, weight=lambda i: Fraction(s + 1, s + 1 - 2 * i)
        )


def _require_family(spec: QuadrinomialSpec, family: Family) -> None:
    if spec.family != family:
        raise DiscriminantError.family_mismatch(str(family))


def disc_quad_k2(spec: QuadrinomialSpec) -> DiscriminantResult:
    """Δ(x^n + a x^2 + b x + c) for ``n > 3`` and ``abc != 0``."""
    _require_family(spec, Family.K2)
    n, a, b, c = spec.n, spec.a, spec.b, spec.c
    ctx = FormulaContext.for_k2(n, a, b, c)
    e1, e2 = ctx.e1, ctx.e2

    bracket = e2 ** (n - 1) * (n * n) + a * a * e2 * 4 + a * b * e1 * 2 + b * b
    if n % 2:
        bracket = bracket + b * ctx.d ** ((n - 1) // 2) * (2 * n)
    # 4a e2 n S + b e1 n T, with S = sum_i C(n-2, 2i) h^(n-2-2i) d^i and
    # T = sum_i C(n-2, 2i) (n-1)/(n-1-2i) h^(n-2-2i) d^i
    bracket = bracket + (
        a * e2 * ctx.power_sum_half(n - 2) * 4 + b * e1 * ctx.shifted_power_sum_half(n - 2)
    ) * n

    exponent = n * (n - 1) // 2
    prefactor = a ** (n - 1) * Fraction(sign_pow(exponent) * (n - 2) ** (n - 1), n)
    return DiscriminantResult(
        value=prefactor * bracket,
        method=Method.CLOSED_FORM_K2,
        sign_exponent_audit=exponent,
    )


def disc_recip_n2(spec: QuadrinomialSpec) -> DiscriminantResult:
    """Δ(x^n + a x^(n-1) + b x^(n-2) + c) for ``n > 3`` and ``abc != 0``."""
    _require_family(spec, Family.RECIP_N2)
    n, a, b, c = spec.n, spec.a, spec.b, spec.c
    # the reciprocal c x^n + b x^2 + a x + 1 scaled to be monic
    ctx = FormulaContext.from_remainder(b * (n - 2), a * (n - 1), GaussianRational(n))
    e1, e2 = ctx.e1, ctx.e2
    inverse_c = c.inverse()

    bracket = e2 ** (n - 1) * (n * n)
    bracket = bracket + (b * b * e2 * 4 + a * b * e1 * 2 + a * a) * inverse_c**2
    if n % 2:
        bracket = bracket + a * inverse_c * ctx.d ** ((n - 1) // 2) * (2 * n)
    # the same two sums as for k2 over the reciprocal remainder, scaled by n / c
    bracket = bracket + (
        b * e2 * ctx.power_sum_half(n - 2) * 4 + a * e1 * ctx.shifted_power_sum_half(n - 2)
    ) * (inverse_c * n)

    exponent = n * (n - 1) // 2
    prefactor = (b * c) ** (n - 1) * Fraction(sign_pow(exponent) * (n - 2) ** (n - 1), n)
    return DiscriminantResult(
        value=prefactor * bracket,
        method=Method.CLOSED_FORM_RECIP_N2,
        sign_exponent_audit=exponent,
    )


def disc_quad_k_nm1(spec: QuadrinomialSpec) -> DiscriminantResult:
    """Δ(x^n + a x^(n-1) + b x + c) for ``n > 4`` and ``abc != 0``."""
    _require_family(spec, Family.K_N_MINUS_1)
    n, a, b, c = spec.n, spec.a, spec.b, spec.c
    ctx = FormulaContext.for_k_nm1(n, a, b, c)
    e1, e2 = ctx.e1, ctx.e2

    # f' at the remainder roots reduces to L z^(n-2) - B z - C
    big_l = a * a * Fraction(n - 1, n * n)
    big_b = b * Fraction(n - 1, n)
    big_c = c - a * b * Fraction(1, n * n)

    bracket = big_l * big_l * e2 ** (n - 2) + big_b * big_b * e2 + big_b * big_c * e1
    bracket = bracket + big_c * big_c
    if n % 2 == 0:
        bracket = bracket - big_l * big_c * ctx.d ** ((n - 2) // 2) * 2
    # subtracts L (2 B e2 S + C e1 T), with S = sum_i C(n-3, 2i) h^(n-3-2i) d^i and
    # T = sum_i C(n-3, 2i) (n-2)/(n-2-2i) h^(n-3-2i) d^i
    bracket = bracket - big_l * (
        big_b * e2 * ctx.power_sum_half(n - 3) * 2
        + big_c * e1 * ctx.shifted_power_sum_half(n - 3)
    )

    exponent = (n + 2) * (n - 1) // 2
    prefactor = a**-2 * b ** (n - 2) * (sign_pow(exponent) * n**4 * (n - 1) ** (n - 3))
    return DiscriminantResult(
        value=prefactor * bracket,
        method=Method.CLOSED_FORM_K_N_MINUS_1,
        sign_exponent_audit=exponent,
    )


def otake_shaska_gamma(n: int, a: GaussianLike, b: GaussianLike) -> GaussianRational:
    a, b = GaussianRational.coerce(a), GaussianRational.coerce(b)
    if a.is_zero() and n % 2:
        return ZERO
    gamma = ZERO
    for k in range((n - 3) // 2 + 1):
        pole = n - k - 3
        inner = Fraction(n * (n - 1) * (5 * n * n - (6 * k + 23) * n + 10 * k + 24), pole)
        s_k = (
            a**4 * ((n - 1) ** 3 * binom(pole, k))
            + b * b * (4 * n * n * (n - 2) * binom(n - k - 4, k))
            - a * a * b * (inner * binom(pole, k))
        )
        scalar = Fraction(sign_pow(n + k) * n**k * (n - 2) ** k) * Fraction(n - 1) ** (
            n - 2 * k - 4
        )
        gamma = gamma + a ** (n - 2 * k - 4) * b**k * s_k * scalar
    return gamma


def otake_shaska_sign_exponent(n: int) -> int:
    return (n - 2) // 2


def disc_otake_shaska(
    n: int, a: GaussianLike, b: GaussianLike, t: GaussianLike
) -> GaussianRational:
    """
    Δ(x^n + t (x^2 + a x + b)) as a polynomial in ``t``::

        (-1)^m1 t^(n-1) ((n-2)^(n-2) (a^2 - 4b) t^2 + gamma t - n^n b^(n-1))

    with ``m1 = ceil((n-3)/2)``.
    """
    a, b, t = GaussianRational.coerce(a), GaussianRational.coerce(b), GaussianRational.coerce(t)
    family = str(Family.OTAKE_SHASKA)
    if n < 4:
        raise DiscriminantError.precondition_failed(family, "n >= 4")
    if t.is_zero():
        raise DiscriminantError.precondition_failed(family, "t != 0")
    if b.is_zero():
        raise DiscriminantError.precondition_failed(family, "b != 0")

    gamma = otake_shaska_gamma(n, a, b)
    inner = (
        (a * a - b * 4) * t * t * (n - 2) ** (n - 2)
        + gamma * t
        - b ** (n - 1) * n**n
    )
    return inner * t ** (n - 1) * sign_pow(otake_shaska_sign_exponent(n))
