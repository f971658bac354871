import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, TypedDict

from src.constants import Method
from src.error import DiscriminantError
from src.exact.combinatorics import sign_pow
from src.exact.gaussian import GaussianLike, GaussianRational
from src.poly.polynomial import Polynomial
from src.resultant.prs import resultant_prs
from src.resultant.sylvester import resultant_sylvester

logger = logging.getLogger(__name__)


class DiscriminantResultDict(TypedDict):
    method: str
    value: str
    sign_exponent_audit: int


@dataclass(frozen=True)
class DiscriminantResult:
    """
    Exact discriminant together with the single code path that produced it.

    ``sign_exponent_audit`` is the exponent ``e`` of the ``(-1)^e`` prefactor applied by that
    path, e.g. ``n(n-1)/2`` for the oracle.
    """

    value: GaussianRational
    method: Method
    sign_exponent_audit: int

    def to_dict(self) -> DiscriminantResultDict:
        return {
            "method": str(self.method),
            "value": str(self.value),
            "sign_exponent_audit": self.sign_exponent_audit,
        }


def discriminant_sign_exponent(n: int) -> int:
    return n * (n - 1) // 2


def discriminant_oracle(
    f: Polynomial, method: Method = Method.ORACLE_SYLVESTER
) -> DiscriminantResult:
    """``Δ(f) = (-1)^(n(n-1)/2) * a_n^(-1) * R(f, f')``, with the resultant from a determinant."""
    if f.is_zero() or int(f.degree) < 1:
        raise DiscriminantError.degree_too_low(degree=f.degree, minimum=1)
    if method == Method.ORACLE_SYLVESTER:
        resultant = resultant_sylvester(f, f.derivative())
    elif method == Method.ORACLE_PRS:
        resultant = resultant_prs(f, f.derivative())
    else:
        raise ValueError(f"{method!r} is not an oracle method")
    n = int(f.degree)
    exponent = discriminant_sign_exponent(n)
    value = resultant / f.leading * sign_pow(exponent)
    logger.debug("oracle %s: degree %d", method, n)
    return DiscriminantResult(value=value, method=method, sign_exponent_audit=exponent)


def resultant_from_roots(
    roots: Iterable[GaussianLike], g: Polynomial, leading: GaussianLike = 1
) -> GaussianRational:
    """``a_n^m * prod g(root)`` for ``f = leading * prod(x - root)``."""
    roots = list(roots)
    value = GaussianRational.coerce(leading) ** int(g.degree)
    for root in roots:
        value = value * g(root)
    return value


def discriminant_from_roots(
    roots: Iterable[GaussianLike], leading: GaussianLike = 1
) -> GaussianRational:
    """``a_n^(2n-2) * prod_{i<j} (root_i - root_j)^2``"""
    roots = [GaussianRational.coerce(root) for root in roots]
    if not roots:
        raise DiscriminantError.degree_too_low(degree=0, minimum=1)
    value = GaussianRational.coerce(leading) ** (2 * len(roots) - 2)
    for left, right in combinations(roots, 2):
        difference = left - right
        value = value * difference * difference
    return value
