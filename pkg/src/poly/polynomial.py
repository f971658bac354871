from collections import defaultdict
from typing import Any, Iterable, Mapping, Sequence, Union

from src.error import DiscriminantError
from src.exact.gaussian import ONE, ZERO, GaussianLike, GaussianRational

NEG_INF = float("-inf")

Degree = Union[int, float]


class Polynomial:
    """
    Univariate polynomial over Q(i), stored as a trimmed tuple of coefficients in
    ascending powers. The zero polynomial has no coefficients and degree ``-inf``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[GaussianLike] = ()):
        items = [GaussianRational.coerce(coeff) for coeff in coeffs]
        while items and items[-1].is_zero():
            items.pop()
        self._coeffs: tuple[GaussianRational, ...] = tuple(items)

    @classmethod
    def _from_trimmed(cls, coeffs: Sequence[GaussianRational]) -> "Polynomial":
        obj = object.__new__(cls)
        obj._coeffs = tuple(coeffs)
        return obj

    @classmethod
    def from_terms(cls, terms: Mapping[int, GaussianLike]) -> "Polynomial":
        if not terms:
            return cls()
        if any(exp < 0 for exp in terms):
            raise ValueError("exponents must be non-negative")
        coeffs = [ZERO] * (max(terms) + 1)
        for exp, coeff in terms.items():
            coeffs[exp] = coeffs[exp] + coeff
        return cls(coeffs)

    @classmethod
    def monomial(cls, coeff: GaussianLike, exp: int) -> "Polynomial":
        return cls.from_terms({exp: coeff})

    @classmethod
    def from_roots(cls, roots: Iterable[GaussianLike], leading: GaussianLike = 1) -> "Polynomial":
        """``leading * prod(x - root)``"""
        result = cls([leading])
        for root in roots:
            result = result * cls([-GaussianRational.coerce(root), ONE])
        return result

    @property
    def coeffs(self) -> tuple[GaussianRational, ...]:
        return self._coeffs

    @property
    def degree(self) -> Degree:
        if not self._coeffs:
            return NEG_INF
        return len(self._coeffs) - 1

    @property
    def leading(self) -> GaussianRational:
        if not self._coeffs:
            return ZERO
        return self._coeffs[-1]

    @property
    def support(self) -> tuple[int, ...]:
        """Exponents carrying a non-zero coefficient, ascending."""
        return tuple(i for i, coeff in enumerate(self._coeffs) if not coeff.is_zero())

    def coeff(self, i: int) -> GaussianRational:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return ZERO

    def terms(self) -> dict[int, GaussianRational]:
        return {i: coeff for i, coeff in enumerate(self._coeffs) if not coeff.is_zero()}

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == ONE

    def monic(self) -> "Polynomial":
        if not self._coeffs:
            raise DiscriminantError.zero_polynomial_input()
        if self.is_monic():
            return self
        return self.scale(self.leading.inverse())

    def scale(self, factor: GaussianLike) -> "Polynomial":
        factor = GaussianRational.coerce(factor)
        if factor.is_zero():
            return Polynomial()
        return self._from_trimmed([coeff * factor for coeff in self._coeffs])

    def derivative(self) -> "Polynomial":
        if len(self._coeffs) <= 1:
            return Polynomial()
        return self._from_trimmed([coeff * i for i, coeff in enumerate(self._coeffs)][1:])

    def reciprocal(self) -> "Polynomial":
        """``x^n * f(1/x)``: the coefficient sequence reversed; the degree drops if ``a_0 = 0``."""
        return Polynomial(reversed(self._coeffs))

    def eval(self, x: GaussianLike) -> GaussianRational:
        x = GaussianRational.coerce(x)
        result = ZERO
        for coeff in reversed(self._coeffs):
            result = result * x + coeff
        return result

    __call__ = eval

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Euclidean division: ``self = q * other + r`` with ``deg r < deg other``."""
        if other.is_zero():
            raise DiscriminantError.zero_polynomial_divisor()
        m = len(other._coeffs) - 1
        remainder = list(self._coeffs)
        if len(remainder) - 1 < m:
            return Polynomial(), self
        inverse_lead = other.leading.inverse()
        quotient = [ZERO] * (len(remainder) - m)
        divisor = [(j, coeff) for j, coeff in enumerate(other._coeffs[:-1]) if not coeff.is_zero()]
        for k in range(len(remainder) - 1, m - 1, -1):
            top = remainder[k]
            if top.is_zero():
                continue
            factor = top * inverse_lead
            quotient[k - m] = factor
            remainder[k] = ZERO
            for j, coeff in divisor:
                remainder[k - m + j] = remainder[k - m + j] - factor * coeff
        return Polynomial(quotient), Polynomial(remainder[:m])

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        return self.divmod(other)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def __add__(self, other: Any) -> "Polynomial":
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(self.coeff(i) + other.coeff(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return self._from_trimmed([-coeff for coeff in self._coeffs])

    def __sub__(self, other: Any) -> "Polynomial":
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "Polynomial":
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> "Polynomial":
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        products: dict[int, GaussianRational] = defaultdict(lambda: ZERO)
        right = other.terms()
        for i, left_coeff in self.terms().items():
            for j, right_coeff in right.items():
                products[i + j] = products[i + j] + left_coeff * right_coeff
        return Polynomial.from_terms(products)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result, base = Polynomial([ONE]), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        terms = [(i, coeff) for i, coeff in enumerate(self._coeffs) if not coeff.is_zero()]
        if not terms:
            return "0"
        parts = []
        for position, (exp, coeff) in enumerate(reversed(terms)):
            negative = coeff.re_num < 0 or (coeff.re_num == 0 and coeff.im_num < 0)
            if negative:
                coeff = -coeff
            body = _render_term(exp, coeff)
            if position == 0:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _as_polynomial(value: Any) -> Union[Polynomial, None]:
    if isinstance(value, Polynomial):
        return value
    try:
        return Polynomial([GaussianRational.coerce(value)])
    except TypeError:
        return None


def _render_term(exp: int, coeff: GaussianRational) -> str:
    if exp == 0:
        return str(coeff) if coeff.is_real() else f"({coeff})"
    monomial = "x" if exp == 1 else f"x^{exp}"
    if coeff == ONE:
        return monomial
    if coeff.is_real():
        return f"{coeff}*{monomial}"
    return f"({coeff})*{monomial}"
