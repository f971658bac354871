from random import Random

import pytest
from hypothesis import strategies as st

import src.closedform.families  # noqa: F401  registers the closed forms
from src.exact.gaussian import GaussianRational
from src.poly.polynomial import Polynomial

small_fractions = st.fractions(min_value=-99, max_value=99, max_denominator=9)

gaussian_rationals = st.builds(GaussianRational.from_fractions, small_fractions, small_fractions)

nonzero_gaussian_rationals = gaussian_rationals.filter(lambda value: not value.is_zero())


@st.composite
def polynomials(draw, min_degree: int = 0, max_degree: int = 6) -> Polynomial:
    """Polynomials of exactly the drawn degree (non-zero leading coefficient)."""
    degree = draw(st.integers(min_value=min_degree, max_value=max_degree))
    lower = draw(st.lists(gaussian_rationals, min_size=degree, max_size=degree))
    leading = draw(nonzero_gaussian_rationals)
    return Polynomial([*lower, leading])


def gr(text: str) -> GaussianRational:
    return GaussianRational.parse(text)


@pytest.fixture
def rng():
    return Random(20240611)
