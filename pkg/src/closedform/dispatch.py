import logging
import warnings
from typing import Optional

from src.closedform.elementary import disc_cubic, disc_quartic_k3
from src.closedform.families import evaluate_family, expand_family
from src.config import FamilyInput
from src.constants import Family, Method
from src.error import DiscriminantError, ErrorKind
from src.poly.polynomial import Polynomial
from src.resultant.discriminant import (
    DiscriminantResult,
    discriminant_oracle,
    discriminant_sign_exponent,
)
from src.warning import DiscriminantUserWarning

logger = logging.getLogger(__name__)


def match_family(f: Polynomial) -> Optional[FamilyInput]:
    """
    Recognizes a monic polynomial as a member of one of the formula families by its support.
    Cubics and quartics ``x^4 + a x^3 + b x + c`` are handled separately by ``closed_form``.
    """
    if not f.is_monic():
        raise ValueError("family matching expects a monic polynomial")
    n = int(f.degree)
    support = set(f.support)
    coeff = f.coeff

    if support == {n, 0} and n >= 1:
        return FamilyInput(family=Family.BINOMIAL, n=n, a=coeff(0))
    if len(support) == 3 and 0 in support and n >= 3:
        (k,) = support - {n, 0}
        return FamilyInput(family=Family.TRINOMIAL, n=n, k=k, a=coeff(k), b=coeff(0))
    if len(support) != 4 or 0 not in support:
        return None

    c = coeff(0)
    quadrinomial = {
        Family.K2: (4, {n, 2, 1, 0}, 2, 1),
        Family.K_N_MINUS_1: (5, {n, n - 1, 1, 0}, n - 1, 1),
        Family.K3: (5, {n, 3, 1, 0}, 3, 1),
        Family.RECIP_N2: (4, {n, n - 1, n - 2, 0}, n - 1, n - 2),
        Family.RECIP_N3: (6, {n, n - 1, n - 3, 0}, n - 1, n - 3),
    }
    for family, (minimum, shape, k, l) in quadrinomial.items():  # noqa: E741
        if n >= minimum and support == shape:
            return FamilyInput(family=family, n=n, a=coeff(k), b=coeff(l), c=c)

    if n % 2 == 0:
        half = n // 2
        rest = support - {n, half, 0}
        if len(rest) == 1 and half in support:
            (l,) = rest  # noqa: E741
            if half > 2 * l:
                return FamilyInput(
                    family=Family.TWO_N, n=half, l=l, a=coeff(half), b=coeff(l), c=c
                )
    return None


def _closed_form_monic(f: Polynomial) -> DiscriminantResult:
    n = int(f.degree)
    coeff = f.coeff
    if n == 3:
        return DiscriminantResult(
            value=disc_cubic(coeff(2), coeff(1), coeff(0)),
            method=Method.CLOSED_FORM_CUBIC,
            sign_exponent_audit=discriminant_sign_exponent(n),
        )
    if n == 4 and set(f.support) <= {4, 3, 1, 0}:
        return DiscriminantResult(
            value=disc_quartic_k3(coeff(3), coeff(1), coeff(0)),
            method=Method.CLOSED_FORM_QUARTIC_K3,
            sign_exponent_audit=discriminant_sign_exponent(n),
        )
    family_input = match_family(f)
    if family_input is None:
        raise DiscriminantError.family_mismatch("any supported family")
    logger.debug("matched %s with n=%d", family_input.family, family_input.n)
    return evaluate_family(family_input)


def closed_form(f: Polynomial) -> DiscriminantResult:
    """
    Δ(f) through the closed form of the family ``f`` belongs to. A non-monic ``f`` is
    made monic first and the result scaled by ``a_n^(2n-2)``.

    Raises ``DiscriminantError`` when no family matches, when a family precondition fails or
    when an internal divisor of the formula vanishes.
    """
    if f.is_zero() or int(f.degree) < 1:
        raise DiscriminantError.degree_too_low(degree=f.degree, minimum=1)
    if f.is_monic():
        return _closed_form_monic(f)
    n = int(f.degree)
    leading = f.leading
    result = _closed_form_monic(f.monic())
    return DiscriminantResult(
        value=result.value * leading ** (2 * n - 2),
        method=result.method,
        sign_exponent_audit=result.sign_exponent_audit,
    )


def _warn_fallback(error: DiscriminantError) -> None:
    warnings.warn(
        f"{error.message}; falling back to the resultant oracle",
        category=DiscriminantUserWarning,
        stacklevel=3,
    )


def dispatch(f: Polynomial) -> DiscriminantResult:
    """Closed form when one applies, the Sylvester oracle otherwise."""
    try:
        return closed_form(f)
    except DiscriminantError as error:
        if error.kind == ErrorKind.DEGENERATE:
            _warn_fallback(error)
        elif error.kind != ErrorKind.PRECONDITION:
            raise
        logger.debug("falling back to the oracle: %s", error.message)
    return discriminant_oracle(f)


def dispatch_family(family_input: FamilyInput) -> DiscriminantResult:
    """
    Closed form of an explicit family member. A vanishing divisor falls back to the oracle on
    the expanded polynomial; precondition failures still raise.
    """
    try:
        return evaluate_family(family_input)
    except DiscriminantError as error:
        if error.kind != ErrorKind.DEGENERATE:
            raise
        _warn_fallback(error)
    return discriminant_oracle(expand_family(family_input))
