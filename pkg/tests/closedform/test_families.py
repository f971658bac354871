import pytest

from src.closedform.families import evaluate_family, expand_family, quadrinomial_spec
from src.config import create_family_input
from src.constants import Method
from src.error import DiscriminantError, ErrorKind
from src.exact.gaussian import GaussianRational
from src.poly.polynomial import Polynomial
from src.resultant.discriminant import discriminant_oracle
from tests.conftest import gr


@pytest.mark.parametrize(
    ("family_input", "expected"),
    (
        (create_family_input("binomial", n=3, a=2), Polynomial.from_terms({3: 1, 0: 2})),
        (
            create_family_input("trinomial", n=5, k=2, a="i", b=3),
            Polynomial.from_terms({5: 1, 2: gr("i"), 0: 3}),
        ),
        (
            create_family_input("os", n=5, a=2, b=3, t="1/2"),
            Polynomial.from_terms({5: 1, 2: gr("1/2"), 1: 1, 0: gr("3/2")}),
        ),
        (
            create_family_input("recip2", n=6, a=1, b=2, c=3),
            Polynomial.from_terms({6: 1, 5: 1, 4: 2, 0: 3}),
        ),
        (
            create_family_input("two_n", n=5, l=2, a=1, b=2, c=3),
            Polynomial.from_terms({10: 1, 5: 1, 2: 2, 0: 3}),
        ),
    ),
)
def test_expand_family(family_input, expected):
    assert expand_family(family_input) == expected


@pytest.mark.parametrize(
    ("family_input", "method"),
    (
        (create_family_input("binomial", n=7, a="-2/3"), Method.CLOSED_FORM_BINOMIAL),
        (create_family_input("trinomial", n=9, k=6, a=2, b="1+i"), Method.CLOSED_FORM_TRINOMIAL),
        (create_family_input("k2", n=9, a=2, b=-1, c="1/3"), Method.CLOSED_FORM_K2),
        (create_family_input("k3", n=9, a=2, b=-1, c="1/3"), Method.CLOSED_FORM_K3),
        (create_family_input("knm1", n=9, a=2, b=-1, c="i"), Method.CLOSED_FORM_K_N_MINUS_1),
        (create_family_input("recip2", n=9, a=2, b=-1, c=5), Method.CLOSED_FORM_RECIP_N2),
        (create_family_input("recip3", n=9, a=2, b=-1, c=5), Method.CLOSED_FORM_RECIP_N3),
        (create_family_input("two_n", n=5, l=2, a=2, b=-1, c=5), Method.PIPELINE_TWO_N),
        (create_family_input("os", n=8, a=2, b=-1, t=5), Method.CLOSED_FORM_OTAKE_SHASKA),
    ),
)
def test_every_family_evaluates_to_the_oracle_value(family_input, method):
    result = evaluate_family(family_input)

    assert result.method == method
    assert result.value == discriminant_oracle(expand_family(family_input)).value


def test_quadrinomial_spec_rejects_other_families():
    with pytest.raises(DiscriminantError, match="not a member of family 'binomial'"):
        quadrinomial_spec(create_family_input("binomial", n=3, a=2))


def test_family_preconditions_surface_as_errors():
    with pytest.raises(DiscriminantError) as error:
        evaluate_family(create_family_input("k2", n=3, a=1, b=1, c=1))

    assert error.value.kind == ErrorKind.PRECONDITION


def test_binomial_of_degree_one():
    assert evaluate_family(create_family_input("binomial", n=1, a=4)).value == GaussianRational(1)
