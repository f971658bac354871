import re
import sys
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Any, Union

from src.error import DiscriminantError, ParseError

# exact results routinely exceed the default int <-> str digit limit
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

_NUMBER = r"\d+(?:/\d+)?"
_GAUSSIAN_PATTERN = (
    rf"(?P<re>[+-]?{_NUMBER})(?P<im>[+-](?:{_NUMBER})?i)?"
    rf"|(?P<im_only>[+-]?(?:{_NUMBER})?i)"
)
GAUSSIAN_REGEX = re.compile(_GAUSSIAN_PATTERN)


def _fraction(text: str, offset: int, source: str) -> Fraction:
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise ParseError("zero denominator", offset + len(numerator) + 1, source)
    return Fraction(int(numerator), int(denominator or 1))


def _imaginary(text: str, offset: int, source: str) -> Fraction:
    body = text[:-1]
    sign = 1
    if body[:1] in ("+", "-"):
        sign = -1 if body[0] == "-" else 1
        body = body[1:]
        offset += 1
    if not body:
        return Fraction(sign)
    return sign * _fraction(body, offset, source)


GaussianLike = Union["GaussianRational", int, Fraction]


class GaussianRational:
    """
    Exact element of Q(i), stored as ``(re + im*i) / den`` with a single shared denominator.

    The representation is normalized on construction: ``den > 0`` and
    ``gcd(re, im, den) == 1``, so equality is structural.
    """

    __slots__ = ("_re", "_im", "_den")

    _re: int
    _im: int
    _den: int

    def __init__(self, re: int = 0, im: int = 0, den: int = 1):
        if not all(isinstance(item, int) for item in (re, im, den)):
            raise TypeError("'re', 'im' and 'den' must be integers")
        if den == 0:
            raise DiscriminantError.division_by_zero()
        self._set_normalized(re, im, den)

    def _set_normalized(self, re: int, im: int, den: int) -> None:
        if den < 0:
            re, im, den = -re, -im, -den
        g = gcd(gcd(re, im), den)
        if g > 1:
            re, im, den = re // g, im // g, den // g
        self._re, self._im, self._den = re, im, den

    @classmethod
    def _from_parts(cls, re: int, im: int, den: int) -> "GaussianRational":
        """Builds a value from parts that may need reduction; ``den`` must be non-zero."""
        obj = object.__new__(cls)
        obj._set_normalized(re, im, den)
        return obj

    @classmethod
    def _from_normalized(cls, re: int, im: int, den: int) -> "GaussianRational":
        obj = object.__new__(cls)
        obj._re, obj._im, obj._den = re, im, den
        return obj

    @classmethod
    def from_fractions(cls, real: Any = 0, imag: Any = 0) -> "GaussianRational":
        real, imag = Fraction(real), Fraction(imag)
        den = real.denominator * imag.denominator // gcd(real.denominator, imag.denominator)
        return cls._from_parts(
            real.numerator * (den // real.denominator),
            imag.numerator * (den // imag.denominator),
            den,
        )

    @classmethod
    def coerce(cls, value: Any) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not Gaussian rationals")
        if isinstance(value, int):
            return cls._from_normalized(value, 0, 1)
        if isinstance(value, Rational):
            return cls._from_normalized(int(value.numerator), 0, int(value.denominator))
        raise TypeError(f"can not convert {type(value).__name__!r} to a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """
        Parses the canonical text form ``p/q+r/si``, e.g. ``3``, ``-1/2``, ``i``, ``2-3/4i``.
        """
        match = GAUSSIAN_REGEX.fullmatch(text)
        if match is None:
            prefix = GAUSSIAN_REGEX.match(text)
            position = prefix.end() if prefix is not None else 0
            raise ParseError("invalid Gaussian rational", position, text)
        if match.group("im_only") is not None:
            return cls.from_fractions(0, _imaginary(match.group("im_only"), 0, text))
        real = _fraction(match.group("re"), 0, text)
        imag = Fraction(0)
        if match.group("im") is not None:
            imag = _imaginary(match.group("im"), match.start("im"), text)
        return cls.from_fractions(real, imag)

    @property
    def re_num(self) -> int:
        return self._re

    @property
    def im_num(self) -> int:
        return self._im

    @property
    def den(self) -> int:
        return self._den

    @property
    def real(self) -> Fraction:
        return Fraction(self._re, self._den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._im, self._den)

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def is_real(self) -> bool:
        return self._im == 0

    def is_integer(self) -> bool:
        return self._den == 1

    def digits(self) -> int:
        """Decimal length of the larger numerator part."""
        return len(str(max(abs(self._re), abs(self._im))))

    def conjugate(self) -> "GaussianRational":
        return self._from_normalized(self._re, -self._im, self._den)

    def norm(self) -> Fraction:
        return Fraction(self._re * self._re + self._im * self._im, self._den * self._den)

    def inverse(self) -> "GaussianRational":
        if self.is_zero():
            raise DiscriminantError.division_by_zero()
        # den / (re + im*i) = den * (re - im*i) / (re^2 + im^2)
        return self._from_parts(
            self._den * self._re,
            -self._den * self._im,
            self._re * self._re + self._im * self._im,
        )

    def __add__(self, other: Any) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self._den == other._den:
            return self._from_parts(self._re + other._re, self._im + other._im, self._den)
        return self._from_parts(
            self._re * other._den + other._re * self._den,
            self._im * other._den + other._im * self._den,
            self._den * other._den,
        )

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return self._from_normalized(-self._re, -self._im, self._den)

    def __pos__(self) -> "GaussianRational":
        return self

    def __sub__(self, other: Any) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if other._im == 0:
            return self._from_parts(
                self._re * other._re, self._im * other._re, self._den * other._den
            )
        return self._from_parts(
            self._re * other._re - self._im * other._im,
            self._re * other._im + self._im * other._re,
            self._den * other._den,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        """
        Exact power. ``0 ** 0 == 1``; negative exponents invert non-zero bases first.
        """
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if self.is_zero():
                raise DiscriminantError.zero_to_negative_power()
            return self.inverse() ** -exponent
        if exponent == 0:
            return ONE
        if self._im == 0:
            return self._from_parts(self._re**exponent, 0, self._den**exponent)
        re, im = gaussian_int_pow(self._re, self._im, exponent)
        return self._from_parts(re, im, self._den**exponent)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, str):
            return NotImplemented
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self._re == other._re and self._im == other._im and self._den == other._den

    def __hash__(self) -> int:
        if self._im == 0:
            return hash(Fraction(self._re, self._den))
        return hash((self._re, self._im, self._den))

    def __str__(self) -> str:
        real, imag = self.real, self.imag
        if imag == 0:
            return str(real)
        if imag == 1:
            imag_str = "i"
        elif imag == -1:
            imag_str = "-i"
        else:
            imag_str = f"{imag}i"
        if real == 0:
            return imag_str
        sign = "+" if imag > 0 else ""
        return f"{real}{sign}{imag_str}"

    def __repr__(self) -> str:
        return f"GaussianRational({self})"

    def __reduce__(self):
        return (self.__class__, (self._re, self._im, self._den))


def gaussian_int_mul(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    """(a + b*i) * (c + d*i) over the Gaussian integers."""
    return a * c - b * d, a * d + b * c


def gaussian_int_pow(re: int, im: int, exponent: int) -> tuple[int, int]:
    result_re, result_im = 1, 0
    base_re, base_im = re, im
    while exponent:
        if exponent & 1:
            result_re, result_im = gaussian_int_mul(result_re, result_im, base_re, base_im)
        exponent >>= 1
        if exponent:
            base_re, base_im = gaussian_int_mul(base_re, base_im, base_re, base_im)
    return result_re, result_im


ZERO = GaussianRational._from_normalized(0, 0, 1)
ONE = GaussianRational._from_normalized(1, 0, 1)
I = GaussianRational._from_normalized(0, 1, 1)


def gr_add(x: GaussianLike, y: GaussianLike) -> GaussianRational:
    return GaussianRational.coerce(x) + y


def gr_sub(x: GaussianLike, y: GaussianLike) -> GaussianRational:
    return GaussianRational.coerce(x) - y


def gr_mul(x: GaussianLike, y: GaussianLike) -> GaussianRational:
    return GaussianRational.coerce(x) * y


def gr_div(x: GaussianLike, y: GaussianLike) -> GaussianRational:
    return GaussianRational.coerce(x) / y


def gr_pow(x: GaussianLike, e: int) -> GaussianRational:
    return GaussianRational.coerce(x) ** e
