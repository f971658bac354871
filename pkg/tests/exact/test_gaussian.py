import pickle
from fractions import Fraction

import pytest
from hypothesis import given

from src.error import DiscriminantError, ParseError
from src.exact.gaussian import (
    ONE,
    ZERO,
    GaussianRational,
    I,
    gaussian_int_pow,
    gr_add,
    gr_div,
    gr_mul,
    gr_pow,
    gr_sub,
)
from tests.conftest import gaussian_rationals, gr, nonzero_gaussian_rationals


def test_value_is_normalized_on_construction():
    value = GaussianRational(6, -4, -8)

    assert value.re_num == -3
    assert value.im_num == 2
    assert value.den == 4
    assert value.real == Fraction(-3, 4)
    assert value.imag == Fraction(1, 2)


def test_zero_denominator_is_an_arithmetic_error():
    with pytest.raises(DiscriminantError, match="division by zero"):
        GaussianRational(1, 0, 0)


@pytest.mark.parametrize("value", (1.5, "1", True))
def test_coerce_rejects_non_rational_values(value):
    with pytest.raises(TypeError):
        GaussianRational.coerce(value)


@pytest.mark.parametrize(
    ("text", "expected"),
    (
        ("3", GaussianRational(3)),
        ("-1/2", GaussianRational(-1, 0, 2)),
        ("i", I),
        ("-i", -I),
        ("2-3/4i", GaussianRational(8, -3, 4)),
        ("1/2+i", GaussianRational(1, 2, 2)),
        ("-5/3i", GaussianRational(0, -5, 3)),
        ("0", ZERO),
    ),
)
def test_parse(text, expected):
    assert GaussianRational.parse(text) == expected


@pytest.mark.parametrize(
    ("text", "position"),
    (
        ("", 0),
        ("1/0", 2),
        ("2+", 1),
        ("abc", 0),
        ("1+2/0i", 4),
    ),
)
def test_parse_reports_failure_position(text, position):
    with pytest.raises(ParseError) as error:
        GaussianRational.parse(text)

    assert error.value.position == position


@pytest.mark.parametrize(
    ("value", "expected"),
    (
        (GaussianRational(3), "3"),
        (GaussianRational(-1, 0, 2), "-1/2"),
        (I, "i"),
        (-I, "-i"),
        (GaussianRational(8, -3, 4), "2-3/4i"),
        (GaussianRational(0, 2, 3), "2/3i"),
        (GaussianRational(1, 1), "1+i"),
        (ZERO, "0"),
    ),
)
def test_canonical_text_form(value, expected):
    assert str(value) == expected


@pytest.mark.parametrize("value", (I, -I, GaussianRational(0, 1, 3), GaussianRational(2, -1)))
def test_imaginary_unit_text_reparses(value):
    assert GaussianRational.parse(str(value)) == value


@given(gaussian_rationals)
def test_canonical_text_form_reparses_to_same_value(value):
    assert GaussianRational.parse(str(value)) == value


def test_i_squared_is_minus_one():
    assert I * I == -ONE


def test_inverse_of_gaussian_value():
    value = gr("3+4i")

    assert value.inverse() == gr("3/25-4/25i")
    assert value * value.inverse() == ONE


def test_division_by_zero_raises():
    with pytest.raises(DiscriminantError, match="division by zero"):
        ONE / ZERO


@pytest.mark.parametrize(
    ("base", "exponent", "expected"),
    (
        (gr("1+i"), 2, gr("2i")),
        (gr("1+i"), 8, GaussianRational(16)),
        (gr("1+i"), -2, gr("-1/2i")),
        (GaussianRational(2), -3, GaussianRational(1, 0, 8)),
        (ZERO, 0, ONE),
        (gr("3/2-i"), 0, ONE),
        (ZERO, 5, ZERO),
    ),
)
def test_power(base, exponent, expected):
    assert base**exponent == expected
    assert gr_pow(base, exponent) == expected


def test_negative_power_of_zero_is_an_error():
    with pytest.raises(DiscriminantError, match="negative power of zero"):
        ZERO**-1


def test_gaussian_int_pow_matches_repeated_multiplication():
    re, im = 1, 0
    for _ in range(13):
        re, im = re * 2 - im * -3, re * -3 + im * 2

    assert gaussian_int_pow(2, -3, 13) == (re, im)


def test_mixed_arithmetic_with_python_rationals():
    value = gr("1/2+i")

    assert value + 1 == gr("3/2+i")
    assert 1 - value == gr("1/2-i")
    assert value * Fraction(2, 3) == gr("1/3+2/3i")
    assert 2 / value == gr("4/5-8/5i")
    assert gr_add(1, 2) == GaussianRational(3)
    assert gr_sub(Fraction(1, 2), I) == gr("1/2-i")
    assert gr_mul(I, I) == GaussianRational(-1)
    assert gr_div(1, I) == -I


def test_real_values_hash_like_fractions():
    assert hash(GaussianRational(3, 0, 4)) == hash(Fraction(3, 4))
    assert GaussianRational(3, 0, 4) == Fraction(3, 4)
    assert GaussianRational(5) == 5


def test_value_is_not_equal_to_its_text():
    assert GaussianRational(1) != "1"


def test_norm_and_conjugate():
    value = gr("1/2-3i")

    assert value.conjugate() == gr("1/2+3i")
    assert value.norm() == Fraction(37, 4)
    assert (value * value.conjugate()).is_real()


def test_digits_counts_the_larger_numerator():
    assert GaussianRational(12345, -7, 2).digits() == 5
    assert ZERO.digits() == 1


def test_value_survives_pickling():
    value = gr("-7/3+2/9i")

    assert pickle.loads(pickle.dumps(value)) == value


@given(gaussian_rationals, gaussian_rationals, gaussian_rationals)
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO


@given(nonzero_gaussian_rationals, gaussian_rationals)
def test_division_inverts_multiplication(x, y):
    assert (y * x) / x == y
    assert x * x.inverse() == ONE


@given(nonzero_gaussian_rationals)
def test_negative_powers_invert_positive_powers(x):
    assert x**5 * x**-5 == ONE
    assert x**-3 == (x**3).inverse()
