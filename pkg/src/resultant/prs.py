import logging
from typing import Optional

from src.error import DiscriminantError
from src.exact.combinatorics import sign_pow
from src.exact.gaussian import ONE, ZERO, GaussianRational
from src.poly.polynomial import Polynomial

logger = logging.getLogger(__name__)


def reduce_resultant(
    f: Polynomial, g: Polynomial, h: Optional[Polynomial] = None
) -> tuple[GaussianRational, Polynomial, Polynomial]:
    """
    One degree-reduction step ``R(f, g) = (-1)^((n-k)m) * b_m^(n-k) * R(f + h*g, g)``,
    where ``k = deg(f + h*g)`` and ``b_m`` is the leading coefficient of ``g``.

    Without ``h`` the negated Euclidean quotient is used, so ``f + h*g`` is the remainder
    of ``f`` by ``g``. Returns ``(factor, f + h*g, g)``; the factor is 0 when ``f + h*g``
    vanishes and ``g`` is not constant.
    """
    if f.is_zero() or g.is_zero():
        raise DiscriminantError.zero_polynomial_input()
    if h is None:
        reduced = f % g
    else:
        reduced = f + h * g
    n, m = int(f.degree), int(g.degree)
    if reduced.is_zero():
        if m == 0:
            return g.leading**n, Polynomial([ONE]), g
        return ZERO, reduced, g
    k = int(reduced.degree)
    factor = g.leading ** (n - k) * sign_pow((n - k) * m)
    return factor, reduced, g


def resultant_prs(f: Polynomial, g: Polynomial) -> GaussianRational:
    """
    Resultant through repeated Euclidean reduction, bottoming out at a constant argument:
    ``R(f, b_0) = b_0^n`` and ``R(a_0, g) = a_0^m``.
    """
    if f.is_zero() or g.is_zero():
        raise DiscriminantError.zero_polynomial_input()
    if int(f.degree) + int(g.degree) < 1:
        raise DiscriminantError.degree_too_low(degree=0, minimum=1)

    factor: GaussianRational = ONE
    while True:
        n, m = int(f.degree), int(g.degree)
        if m == 0:
            return factor * g.leading**n
        if n == 0:
            return factor * f.leading**m
        if n < m:
            factor = factor * sign_pow(n * m)
            f, g = g, f
            continue
        step, remainder, g = reduce_resultant(f, g)
        if remainder.is_zero():
            return ZERO
        logger.debug("prs step: deg %d -> %d against deg %d", n, int(remainder.degree), m)
        factor = factor * step
        f = remainder
