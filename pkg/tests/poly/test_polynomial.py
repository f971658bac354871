import pytest
from hypothesis import given

from src.error import DiscriminantError
from src.exact.gaussian import ONE, ZERO, GaussianRational, I
from src.poly.polynomial import NEG_INF, Polynomial
from tests.conftest import gaussian_rationals, gr, polynomials


def test_trailing_zero_coefficients_are_trimmed():
    f = Polynomial([1, 2, 0, 0])

    assert f.degree == 1
    assert f.coeffs == (ONE, GaussianRational(2))


def test_zero_polynomial():
    f = Polynomial()

    assert f.is_zero()
    assert f.degree == NEG_INF
    assert f.leading == ZERO
    assert str(f) == "0"


def test_from_terms_sums_repeated_entries_and_keeps_support():
    f = Polynomial.from_terms({7: 1, 2: gr("2-3i"), 0: gr("-1/2")})

    assert f.degree == 7
    assert f.support == (0, 2, 7)
    assert f.coeff(2) == gr("2-3i")
    assert f.coeff(3) == ZERO
    assert f.coeff(100) == ZERO
    assert f.terms() == {0: gr("-1/2"), 2: gr("2-3i"), 7: ONE}


def test_from_terms_rejects_negative_exponents():
    with pytest.raises(ValueError, match="non-negative"):
        Polynomial.from_terms({-1: 1})


@pytest.mark.parametrize(
    ("f", "expected"),
    (
        (Polynomial.from_terms({7: 1, 2: gr("2-3i"), 0: gr("-1/2")}), "x^7 + (2-3i)*x^2 - 1/2"),
        (Polynomial([1, 1, 1, 1]), "x^3 + x^2 + x + 1"),
        (Polynomial([0, -1]), "-x"),
        (Polynomial([I]), "(i)"),
        (Polynomial.from_terms({2: -3, 1: gr("-i")}), "-3*x^2 - (i)*x"),
        (Polynomial.from_terms({4: gr("1/2")}), "1/2*x^4"),
    ),
)
def test_text_form(f, expected):
    assert str(f) == expected


def test_derivative():
    f = Polynomial.from_terms({5: 1, 2: 3, 1: gr("i"), 0: 7})

    assert f.derivative() == Polynomial.from_terms({4: 5, 1: 6, 0: gr("i")})
    assert Polynomial([4]).derivative().is_zero()


def test_monic_and_scale():
    f = Polynomial([2, 0, 4])

    assert f.monic() == Polynomial([gr("1/2"), 0, 1])
    assert f.monic().is_monic()
    assert f.scale(0).is_zero()
    assert f.scale(I) == Polynomial([gr("2i"), 0, gr("4i")])


def test_monic_of_zero_polynomial_is_an_error():
    with pytest.raises(DiscriminantError, match="zero polynomial"):
        Polynomial().monic()


def test_reciprocal_reverses_coefficients():
    f = Polynomial.from_terms({5: 1, 4: 2, 2: 3, 0: 4})

    assert f.reciprocal() == Polynomial.from_terms({5: 4, 3: 3, 1: 2, 0: 1})


def test_eval_uses_horner_scheme():
    f = Polynomial([1, 0, 1])

    assert f(I) == ZERO
    assert f.eval(2) == GaussianRational(5)


def test_from_roots_vanishes_on_roots():
    roots = [gr("1"), gr("-i"), gr("2/3+i")]
    f = Polynomial.from_roots(roots, leading=3)

    assert f.degree == 3
    assert f.leading == GaussianRational(3)
    assert all(f(root) == ZERO for root in roots)


def test_division_by_zero_polynomial_raises():
    with pytest.raises(DiscriminantError, match="zero polynomial"):
        divmod(Polynomial([1, 1]), Polynomial())


def test_divmod_small_example():
    f = Polynomial.from_terms({4: 1, 1: 1, 0: 1})
    g = Polynomial.from_terms({2: 1, 0: 1})
    q, r = divmod(f, g)

    assert q == Polynomial.from_terms({2: 1, 0: -1})
    assert r == Polynomial.from_terms({1: 1, 0: 2})
    assert f // g == q
    assert f % g == r


def test_power():
    assert Polynomial([1, 1]) ** 3 == Polynomial([1, 3, 3, 1])
    assert Polynomial([1, 1]) ** 0 == Polynomial([1])


def test_scalar_arithmetic():
    f = Polynomial([1, 2])

    assert f + 1 == Polynomial([2, 2])
    assert 1 - f == Polynomial([0, -2])
    assert f * I == Polynomial([I, gr("2i")])
    assert f - f == Polynomial()


@given(polynomials(max_degree=8), polynomials(max_degree=4))
def test_euclidean_division_identity(f, g):
    q, r = divmod(f, g)

    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@given(polynomials(max_degree=5), polynomials(max_degree=5), gaussian_rationals)
def test_ring_homomorphism_of_evaluation(f, g, x):
    assert (f * g)(x) == f(x) * g(x)
    assert (f + g)(x) == f(x) + g(x)


@given(polynomials(max_degree=5), polynomials(max_degree=5))
def test_product_rule(f, g):
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()
