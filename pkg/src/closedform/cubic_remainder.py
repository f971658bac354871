import logging

from src.closedform.quadratic_remainder import FormulaContext
from src.closedform.recurrence import TrParams, tr_closed
from src.constants import Family, Method
from src.error import DiscriminantError
from src.exact.combinatorics import sign_pow
from src.exact.gaussian import GaussianLike, GaussianRational
from src.poly.quadrinomial import QuadrinomialSpec
from src.resultant.discriminant import DiscriminantResult

logger = logging.getLogger(__name__)


def k3_sign_exponent(n: int) -> int:
    return (n - 1) * (n + 2) // 2


def k3_core(n: int, a: GaussianLike, b: GaussianLike, c: GaussianLike) -> GaussianRational:
    """
    Δ(x^n + a x^3 + b x + c) for ``n > 4`` and ``abc != 0``.

    ``n f - x f' = n r`` with ``r = (a(n-3)/n) x^3 + (b(n-1)/n) x + c``; the remainder of
    ``f'`` by ``r`` is a quadratic read off the ``t_r`` sequence of ``r``. Raises a degenerate
    error when that quadratic drops degree.
    """
    a, b, c = GaussianRational.coerce(a), GaussianRational.coerce(b), GaussianRational.coerce(c)
    params = TrParams(b3=a * (n - 3) / n, b1=-b * (n - 1) / n, b0=-c)
    b3, b0 = params.b3, params.b0

    lead = a * 3 + b3 * tr_closed(params, n - 2) * n
    if lead.is_zero():
        logger.debug("k3 remainder degenerates for n=%d", n)
        raise DiscriminantError.zero_divisor("3a + n b3 t_(n-2)")
    mid = b3 * tr_closed(params, n - 1) * n
    const = b + b0 * tr_closed(params, n - 3) * n
    ctx = FormulaContext.from_remainder(lead, mid, const)
    e1, e2 = ctx.e1, ctx.e2

    # product of A z^3 + B z + C over both remainder roots
    big_a, big_b, big_c = b3, b * (n - 1) / n, c
    bracket = (
        big_a * big_a * e2**3
        + big_a * big_b * (e1 * e1 - e2 * 2) * e2
        + big_a * big_c * (e1**3 - e1 * e2 * 3)
        + big_b * big_b * e2
        + big_b * big_c * e1
        + big_c * big_c
    )
    prefactor = a ** (n - 3) * lead**3 * (sign_pow(k3_sign_exponent(n)) * (n - 3) ** (n - 3))
    return prefactor * bracket


def disc_quad_k3(spec: QuadrinomialSpec) -> DiscriminantResult:
    if spec.family != Family.K3:
        raise DiscriminantError.family_mismatch(str(Family.K3))
    return DiscriminantResult(
        value=k3_core(spec.n, spec.a, spec.b, spec.c),
        method=Method.CLOSED_FORM_K3,
        sign_exponent_audit=k3_sign_exponent(spec.n),
    )


def disc_recip_n3(spec: QuadrinomialSpec) -> DiscriminantResult:
    """
    Δ(x^n + a x^(n-1) + b x^(n-3) + c) through the reciprocal ``c x^n + b x^3 + a x + 1``,
    whose discriminant is the same.
    """
    if spec.family != Family.RECIP_N3:
        raise DiscriminantError.family_mismatch(str(Family.RECIP_N3))
    n, a, b, c = spec.n, spec.a, spec.b, spec.c
    inverse_c = c.inverse()
    value = c ** (2 * n - 2) * k3_core(n, b * inverse_c, a * inverse_c, inverse_c)
    return DiscriminantResult(
        value=value,
        method=Method.CLOSED_FORM_RECIP_N3,
        sign_exponent_audit=k3_sign_exponent(n),
    )
