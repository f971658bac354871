from src import registry
from src.closedform.cubic_remainder import disc_quad_k3, disc_recip_n3
from src.closedform.elementary import disc_binomial, disc_trinomial
from src.closedform.pipeline import disc_2n_pipeline
from src.closedform.quadratic_remainder import (
    disc_otake_shaska,
    disc_quad_k2,
    disc_quad_k_nm1,
    disc_recip_n2,
    otake_shaska_sign_exponent,
)
from src.config import FamilyInput
from src.constants import Family, Method
from src.error import DiscriminantError
from src.poly.polynomial import Polynomial
from src.poly.quadrinomial import QUADRINOMIAL_FAMILIES, QuadrinomialSpec, expand
from src.resultant.discriminant import DiscriminantResult, discriminant_sign_exponent


def quadrinomial_spec(family_input: FamilyInput) -> QuadrinomialSpec:
    if family_input.family not in QUADRINOMIAL_FAMILIES:
        raise DiscriminantError.family_mismatch(str(family_input.family))
    return QuadrinomialSpec.create(
        family=family_input.family,
        n=family_input.n,
        a=family_input.a,
        b=family_input.b,
        c=family_input.c,
        l=family_input.l,
    )


def expand_family(family_input: FamilyInput) -> Polynomial:
    """The polynomial a family input stands for."""
    n, a, b = family_input.n, family_input.a, family_input.b
    match family_input.family:
        case Family.BINOMIAL:
            return Polynomial.from_terms({n: 1, 0: a})
        case Family.TRINOMIAL:
            assert family_input.k is not None
            return Polynomial.from_terms({n: 1, family_input.k: a, 0: b})
        case Family.OTAKE_SHASKA:
            t = family_input.t
            assert a is not None and b is not None and t is not None
            return Polynomial.from_terms({n: 1, 2: t, 1: t * a, 0: t * b})
    return expand(quadrinomial_spec(family_input))


def evaluate_family(family_input: FamilyInput) -> DiscriminantResult:
    """Runs the closed form registered for the input's family."""
    return registry.closed_forms[family_input.family](family_input)


def _binomial(family_input: FamilyInput) -> DiscriminantResult:
    n = family_input.n
    return DiscriminantResult(
        value=disc_binomial(n, family_input.a),
        method=Method.CLOSED_FORM_BINOMIAL,
        sign_exponent_audit=discriminant_sign_exponent(n),
    )


def _trinomial(family_input: FamilyInput) -> DiscriminantResult:
    n, k = family_input.n, family_input.k
    assert k is not None
    return DiscriminantResult(
        value=disc_trinomial(n, k, family_input.a, family_input.b),
        method=Method.CLOSED_FORM_TRINOMIAL,
        sign_exponent_audit=discriminant_sign_exponent(n),
    )


def _otake_shaska(family_input: FamilyInput) -> DiscriminantResult:
    n = family_input.n
    return DiscriminantResult(
        value=disc_otake_shaska(n, family_input.a, family_input.b, family_input.t),
        method=Method.CLOSED_FORM_OTAKE_SHASKA,
        sign_exponent_audit=otake_shaska_sign_exponent(n),
    )


registry.register_closed_form(Family.BINOMIAL, _binomial)
registry.register_closed_form(Family.TRINOMIAL, _trinomial)
registry.register_closed_form(Family.K2, lambda item: disc_quad_k2(quadrinomial_spec(item)))
registry.register_closed_form(Family.K3, lambda item: disc_quad_k3(quadrinomial_spec(item)))
registry.register_closed_form(
    Family.K_N_MINUS_1, lambda item: disc_quad_k_nm1(quadrinomial_spec(item))
)
registry.register_closed_form(Family.RECIP_N2, lambda item: disc_recip_n2(quadrinomial_spec(item)))
registry.register_closed_form(Family.RECIP_N3, lambda item: disc_recip_n3(quadrinomial_spec(item)))
registry.register_closed_form(Family.TWO_N, lambda item: disc_2n_pipeline(quadrinomial_spec(item)))
registry.register_closed_form(Family.OTAKE_SHASKA, _otake_shaska)
