import warnings

import pytest

from src.closedform.dispatch import closed_form, dispatch, dispatch_family, match_family
from src.config import FamilyInput
from src.constants import Family, Method
from src.error import DiscriminantError, ErrorKind
from src.exact.gaussian import ZERO, GaussianRational
from src.poly.parser import parse_polynomial
from src.resultant.discriminant import discriminant_oracle
from src.warning import DiscriminantUserWarning


@pytest.mark.parametrize(
    ("text", "family", "n"),
    (
        ("x^7 - 3", Family.BINOMIAL, 7),
        ("x + 2", Family.BINOMIAL, 1),
        ("x^7 + 2x^4 - 3", Family.TRINOMIAL, 7),
        ("x^7 + 2x^2 + x - 3", Family.K2, 7),
        ("x^7 + 2x^3 + x - 3", Family.K3, 7),
        ("x^6 + x^3 + x + 1", Family.K3, 6),
        ("x^7 + 2x^6 + x - 3", Family.K_N_MINUS_1, 7),
        ("x^7 + 2x^6 + x^5 - 3", Family.RECIP_N2, 7),
        ("x^7 + 2x^6 + x^4 - 3", Family.RECIP_N3, 7),
        ("x^10 + x^5 + 2x^2 + 3", Family.TWO_N, 5),
        ("x^8 + x^4 + x + 1", Family.TWO_N, 4),
    ),
)
def test_match_family(text, family, n):
    family_input = match_family(parse_polynomial(text))

    assert family_input.family == family
    assert family_input.n == n


def test_match_family_reads_coefficients():
    family_input = match_family(parse_polynomial("x^10 + 3x^5 - 1/2x^2 + i"))

    assert family_input.l == 2
    assert family_input.a == GaussianRational(3)
    assert family_input.b == GaussianRational(-1, 0, 2)
    assert family_input.c == GaussianRational(0, 1)


@pytest.mark.parametrize(
    "text",
    (
        "x^2 + x + 1",
        "x^7 + x^5 + x^3 + x + 1",
        "x^7 + x^2 + x",
        "x^8 + x^4 + x^2 + 1",
        "x^5 + x^4 + x^2 + 1",
    ),
)
def test_unsupported_supports_have_no_family(text):
    assert match_family(parse_polynomial(text)) is None


def test_match_family_expects_monic_input():
    with pytest.raises(ValueError, match="monic"):
        match_family(parse_polynomial("2x^3 + 1"))


@pytest.mark.parametrize(
    ("text", "method", "expected"),
    (
        ("x^3 + x^2 + x + 1", Method.CLOSED_FORM_CUBIC, GaussianRational(-16)),
        ("x^4 + x^3 + x + 1", Method.CLOSED_FORM_QUARTIC_K3, GaussianRational(0)),
        ("x^4 + x^2 + x + 1", Method.CLOSED_FORM_K2, GaussianRational(257)),
        ("x^5 - x + 1", Method.CLOSED_FORM_TRINOMIAL, GaussianRational(2869)),
        ("2x^3 + 2x^2 + 2x + 2", Method.CLOSED_FORM_CUBIC, GaussianRational(-256)),
    ),
)
def test_closed_form(text, method, expected):
    result = closed_form(parse_polynomial(text))

    assert result.method == method
    assert result.value == expected


@pytest.mark.parametrize(
    "text",
    (
        "3x^9 + x^2 - 2x + 5",
        "(1+i)x^8 + x^4 + 2x + 1",
        "-1/2x^10 + x^5 + x^2 + 7",
        "ix^6 - 4",
    ),
)
def test_non_monic_input_is_scaled_back(text):
    f = parse_polynomial(text)

    assert closed_form(f).value == discriminant_oracle(f).value


def test_closed_form_without_family_is_a_precondition_error():
    with pytest.raises(DiscriminantError) as error:
        closed_form(parse_polynomial("x^7 + x^5 + x^3 + x + 1"))

    assert error.value.kind == ErrorKind.PRECONDITION


def test_closed_form_rejects_constants():
    with pytest.raises(DiscriminantError, match="degree must be at least 1"):
        closed_form(parse_polynomial("5"))


def test_dispatch_falls_back_to_the_oracle_silently():
    f = parse_polynomial("x^7 + x^5 + x^3 + x + 1")

    with warnings.catch_warnings():
        warnings.simplefilter("error")
        result = dispatch(f)

    assert result.method == Method.ORACLE_SYLVESTER
    assert result.value == discriminant_oracle(f).value


def test_dispatch_falls_back_on_failed_family_precondition():
    # a^2 = 4c violates the two_n precondition
    result = dispatch(parse_polynomial("x^10 + 2x^5 + x^2 + 1"))

    assert result.method == Method.ORACLE_SYLVESTER


def test_dispatch_warns_when_an_internal_divisor_vanishes():
    f = parse_polynomial("x^5 + x^3 + 3/10x + 1")

    with pytest.warns(DiscriminantUserWarning, match="falling back to the resultant oracle"):
        result = dispatch(f)

    assert result.method == Method.ORACLE_SYLVESTER
    assert result.value == discriminant_oracle(f).value


def test_dispatch_prefers_the_closed_form():
    result = dispatch(parse_polynomial("x^12 + 5x^11 - x + 2"))

    assert result.method == Method.CLOSED_FORM_K_N_MINUS_1
    assert result.value == discriminant_oracle(parse_polynomial("x^12 + 5x^11 - x + 2")).value


def test_sparse_gaussian_octic_goes_through_k3():
    f = parse_polynomial("x^8 - ix^3 + ix + 1")
    result = closed_form(f)

    assert result.method == Method.CLOSED_FORM_K3
    assert result.value == discriminant_oracle(f).value


@pytest.mark.parametrize(
    ("text", "method"),
    (
        ("x^4 - x^2 - 2x + 2", Method.CLOSED_FORM_K2),
        ("x^3 - 3x + 2", Method.CLOSED_FORM_CUBIC),
    ),
)
def test_repeated_root_gives_zero_on_both_paths(text, method):
    f = parse_polynomial(text)
    result = closed_form(f)

    assert result.method == method
    assert result.value == ZERO
    assert discriminant_oracle(f).value == ZERO


def test_dispatch_family_uses_the_closed_form():
    result = dispatch_family(FamilyInput(family=Family.K2, n=4, a=1, b=1, c=1))

    assert result.method == Method.CLOSED_FORM_K2
    assert result.value == GaussianRational(257)


def test_dispatch_family_falls_back_when_an_internal_divisor_vanishes():
    family_input = FamilyInput(family=Family.K3, n=5, a=1, b=GaussianRational(3, 0, 10), c=1)

    with pytest.warns(DiscriminantUserWarning, match="falling back to the resultant oracle"):
        result = dispatch_family(family_input)

    assert result.method == Method.ORACLE_SYLVESTER
    assert result.value == discriminant_oracle(parse_polynomial("x^5 + x^3 + 3/10x + 1")).value


def test_dispatch_family_keeps_precondition_errors():
    with pytest.raises(DiscriminantError) as error:
        dispatch_family(FamilyInput(family=Family.K2, n=3, a=1, b=1, c=1))

    assert error.value.kind == ErrorKind.PRECONDITION
