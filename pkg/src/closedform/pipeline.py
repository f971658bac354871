import logging

from src.constants import Family, Method
from src.error import DiscriminantError
from src.exact.combinatorics import sign_pow
from src.exact.gaussian import GaussianRational
from src.poly.polynomial import Polynomial
from src.poly.quadrinomial import QuadrinomialSpec
from src.resultant.discriminant import DiscriminantResult
from src.resultant.sylvester import resultant_sylvester

logger = logging.getLogger(__name__)


def _require_two_n(spec: QuadrinomialSpec) -> None:
    if spec.family != Family.TWO_N:
        raise DiscriminantError.family_mismatch(str(Family.TWO_N))


def reduced_derivative(spec: QuadrinomialSpec) -> Polynomial:
    """``f' / (2n x^(l-1)) = x^(2n-l) + (a/2) x^(n-l) + bl/(2n)``"""
    _require_two_n(spec)
    n, l, a, b = spec.n, spec.l, spec.a, spec.b  # noqa: E741
    assert l is not None
    return Polynomial.from_terms({2 * n - l: 1, n - l: a / 2, 0: b * l / (2 * n)})


def derivative_monomial_resultant(spec: QuadrinomialSpec) -> GaussianRational:
    """``R(f, 2n x^(l-1)) = (2n)^(2n) c^(l-1)``"""
    _require_two_n(spec)
    n, l = spec.n, spec.l  # noqa: E741
    assert l is not None
    return spec.c ** (l - 1) * (2 * n) ** (2 * n)


def pipeline_remainders(spec: QuadrinomialSpec) -> tuple[Polynomial, Polynomial, Polynomial]:
    """
    The three remainders of the Euclidean chain started from ``f`` and its reduced derivative:

    - ``r0 = f mod f2'`` of degree n
    - ``r1 = f2' mod r0`` of degree n - l
    - ``r2 = r0 - (a / (2 lc(r1))) x^l r1`` of degree 2l
    """
    _require_two_n(spec)
    n, l, a, b, c = spec.n, spec.l, spec.a, spec.b, spec.c  # noqa: E741
    assert l is not None
    a2_minus_4c = a * a - c * 4
    if a2_minus_4c.is_zero():
        raise DiscriminantError.zero_divisor("a^2 - 4c")

    gamma = b * (2 * n - l) / (2 * n)
    r0 = Polynomial.from_terms({n: a / 2, l: gamma, 0: c})
    r1 = Polynomial.from_terms(
        {
            n - l: a2_minus_4c / (a * 2),
            l: (b * (2 * n - l) / (a * n)) ** 2,
            0: b * (a * a * l + c * (4 * (2 * n - l))) / (a * a * (2 * n)),
        }
    )
    r2 = Polynomial.from_terms(
        {
            2 * l: -(b * b * (2 * n - l) ** 2) / (a2_minus_4c * n * n),
            l: b * ((a * a - c * 8) * (2 * n - l) - a * a * l) / (a2_minus_4c * (2 * n)),
            0: c,
        }
    )
    return r0, r1, r2


def pipeline_sign_exponent(spec: QuadrinomialSpec) -> int:
    assert spec.l is not None
    return spec.n + spec.l


def disc_2n_pipeline(spec: QuadrinomialSpec) -> DiscriminantResult:
    """
    Δ(x^(2n) + a x^n + b x^l + c) for ``n > 2l``, ``abc != 0`` and ``a^2 != 4c``.

    The product of the monic ``r1`` over the 2l roots of the monic ``r2`` is taken as their
    resultant, so no determinant of size beyond ``n + l`` is formed.
    """
    n, l, a, b, c = spec.n, spec.l, spec.a, spec.b, spec.c  # noqa: E741
    _, r1, r2 = pipeline_remainders(spec)
    assert l is not None
    logger.debug("two_n pipeline: n=%d l=%d, resultant of degrees %d and %d", n, l, 2 * l, n - l)
    product = resultant_sylvester(r2.monic(), r1.monic())

    exponent = pipeline_sign_exponent(spec)
    prefactor = (
        b ** (2 * (n - l))
        * c ** (l - 1)
        * (a * a - c * 4) ** l
        * (sign_pow(exponent) * n ** (2 * l) * (2 * n - l) ** (2 * (n - l)))
    )
    return DiscriminantResult(
        value=prefactor * product,
        method=Method.PIPELINE_TWO_N,
        sign_exponent_audit=exponent,
    )
