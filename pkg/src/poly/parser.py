import re
from collections import defaultdict

from src.error import ParseError
from src.exact.gaussian import ONE, ZERO, GaussianRational
from src.poly.polynomial import Polynomial

_NUMBER_REGEX = re.compile(r"(?P<num>\d+)(?:/(?P<den>\d+))?(?P<imag>i)?|(?P<unit>i)")
_EXPONENT_REGEX = re.compile(r"\d+")


class PolynomialParser:
    """
    Strict parser for the polynomial text format, e.g. ``x^7 + (2-3i)*x^2 - 1/2``.

    Terms may come in any order and repeated powers are summed. Coefficients are
    rationals (``3/4``), pure imaginary literals (``2i``, ``i``) or any Gaussian
    rational in parentheses. The ``*`` between a coefficient and ``x`` is optional.
    """

    def __init__(self, text: str):
        self._text = text
        self._pos = 0

    def parse(self) -> Polynomial:
        terms: dict[int, GaussianRational] = defaultdict(lambda: ZERO)
        self._skip_whitespace()
        if self._at_end():
            raise self._error("empty polynomial")
        sign = self._sign(required=False)
        while True:
            exp, coeff = self._term()
            terms[exp] = terms[exp] + coeff * sign
            self._skip_whitespace()
            if self._at_end():
                break
            sign = self._sign(required=True)
        return Polynomial.from_terms(terms)

    def _error(self, reason: str) -> ParseError:
        return ParseError(reason, self._pos, self._text)

    def _at_end(self) -> bool:
        return self._pos >= len(self._text)

    def _peek(self) -> str:
        return self._text[self._pos] if self._pos < len(self._text) else ""

    def _skip_whitespace(self) -> None:
        while self._peek().isspace():
            self._pos += 1

    def _sign(self, required: bool) -> int:
        char = self._peek()
        if char in ("+", "-"):
            self._pos += 1
            return -1 if char == "-" else 1
        if required:
            raise self._error("expected '+' or '-'")
        return 1

    def _term(self) -> tuple[int, GaussianRational]:
        self._skip_whitespace()
        char = self._peek()
        if char == "x":
            return self._monomial(), ONE
        if char == "(":
            coeff = self._group()
        elif char.isdigit() or char == "i":
            coeff = self._number()
        else:
            raise self._error("expected a coefficient or 'x'")
        self._skip_whitespace()
        if self._peek() == "*":
            self._pos += 1
            self._skip_whitespace()
            if self._peek() != "x":
                raise self._error("expected 'x'")
        if self._peek() == "x":
            return self._monomial(), coeff
        return 0, coeff

    def _number(self) -> GaussianRational:
        match = _NUMBER_REGEX.match(self._text, self._pos)
        if match is None:
            raise self._error("expected a number")
        if match.group("unit") is not None:
            self._pos = match.end()
            return GaussianRational(0, 1)
        den = int(match.group("den") or 1)
        if den == 0:
            self._pos = match.start("den")
            raise self._error("zero denominator")
        numerator = int(match.group("num"))
        self._pos = match.end()
        if match.group("imag"):
            return GaussianRational(0, numerator, den)
        return GaussianRational(numerator, 0, den)

    def _group(self) -> GaussianRational:
        start = self._pos + 1
        end = self._text.find(")", start)
        if end == -1:
            raise self._error("unclosed parenthesis")
        try:
            value = GaussianRational.parse(self._text[start:end])
        except ParseError as error:
            self._pos = start + error.position
            raise self._error(error.context["reason"]) from error
        self._pos = end + 1
        return value

    def _monomial(self) -> int:
        self._pos += 1
        if self._peek() != "^":
            return 1
        self._pos += 1
        match = _EXPONENT_REGEX.match(self._text, self._pos)
        if match is None:
            raise self._error("expected an exponent")
        self._pos = match.end()
        return int(match.group())


def parse_polynomial(text: str) -> Polynomial:
    return PolynomialParser(text).parse()
