import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.closedform.elementary import (
    disc_binomial,
    disc_cubic,
    disc_quartic_depressed,
    disc_quartic_k3,
    disc_trinomial,
)
from src.error import DiscriminantError, ErrorKind
from src.exact.gaussian import GaussianRational
from src.poly.polynomial import Polynomial
from src.resultant.discriminant import discriminant_oracle
from tests.conftest import gaussian_rationals, gr, nonzero_gaussian_rationals


def oracle(terms):
    return discriminant_oracle(Polynomial.from_terms(terms)).value


@pytest.mark.parametrize(
    ("n", "a", "expected"),
    (
        (1, 5, GaussianRational(1)),
        (2, 1, GaussianRational(-4)),
        (3, 1, GaussianRational(-27)),
        (4, -1, GaussianRational(-256)),
        (2, gr("i"), gr("-4i")),
    ),
)
def test_disc_binomial(n, a, expected):
    assert disc_binomial(n, a) == expected


@pytest.mark.parametrize(
    ("n", "k", "a", "b", "expected"),
    (
        (3, 1, -1, 1, GaussianRational(-23)),
        (3, 2, 1, 1, GaussianRational(-31)),
        (4, 2, -2, 1, GaussianRational(0)),
        (6, 3, 1, 1, GaussianRational(-19683)),
    ),
)
def test_disc_trinomial(n, k, a, b, expected):
    assert disc_trinomial(n, k, a, b) == expected


@pytest.mark.parametrize(
    ("call", "condition"),
    (
        (lambda: disc_binomial(0, 1), "n >= 1"),
        (lambda: disc_binomial(3, 0), "a != 0"),
        (lambda: disc_trinomial(2, 1, 1, 1), "n >= 3"),
        (lambda: disc_trinomial(5, 5, 1, 1), "n > k > 0"),
        (lambda: disc_trinomial(5, 0, 1, 1), "n > k > 0"),
        (lambda: disc_trinomial(5, 2, 0, 1), "ab != 0"),
    ),
)
def test_preconditions(call, condition):
    with pytest.raises(DiscriminantError) as error:
        call()

    assert error.value.kind == ErrorKind.PRECONDITION
    assert error.value.context["condition"] == condition


def test_small_degree_formulas():
    assert disc_cubic(1, 1, 1) == GaussianRational(-16)
    assert disc_cubic(0, -1, 0) == GaussianRational(4)
    assert disc_quartic_k3(1, 1, 1) == GaussianRational(0)
    assert disc_quartic_depressed(1, 1, 1) == GaussianRational(257)


@settings(max_examples=40)
@given(st.integers(min_value=1, max_value=9), nonzero_gaussian_rationals)
def test_binomial_matches_oracle(n, a):
    assert disc_binomial(n, a) == oracle({n: 1, 0: a})


@settings(max_examples=60)
@given(
    st.integers(min_value=3, max_value=10).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(min_value=1, max_value=n - 1))
    ),
    nonzero_gaussian_rationals,
    nonzero_gaussian_rationals,
)
def test_trinomial_matches_oracle(nk, a, b):
    n, k = nk

    assert disc_trinomial(n, k, a, b) == oracle({n: 1, k: a, 0: b})


@given(gaussian_rationals, gaussian_rationals, gaussian_rationals)
def test_cubic_matches_oracle(a, b, c):
    assert disc_cubic(a, b, c) == oracle({3: 1, 2: a, 1: b, 0: c})


@given(gaussian_rationals, gaussian_rationals, gaussian_rationals)
def test_quartics_match_oracle(a, b, c):
    assert disc_quartic_k3(a, b, c) == oracle({4: 1, 3: a, 1: b, 0: c})
    assert disc_quartic_depressed(a, b, c) == oracle({4: 1, 2: a, 1: b, 0: c})
