from enum import Enum
from typing import Any, Optional


class ErrorKind(str, Enum):
    ARITHMETIC = "arithmetic"
    PRECONDITION = "precondition"
    DEGENERATE = "degenerate"
    PARSE = "parse"
    USAGE = "usage"

    def __str__(self) -> str:
        return self.value


class DiscriminantError(Exception):
    _message_for_code = {
        1: "division by zero",
        2: "division by the zero polynomial",
        3: "zero polynomial is not allowed here",
        4: "degree must be at least {minimum}, got {degree}",
        5: "negative power of zero",
        # preconditions of closed forms
        10: "{family} requires {condition}",
        11: "polynomial is not a member of family {family!r}",
        # degenerate internal divisors
        20: "internal divisor {divisor!r} vanishes for this instance",
        # text input
        30: "{reason} at position {position}",
        # command line
        40: "{reason}",
    }
    _kind_for_code = {
        1: ErrorKind.ARITHMETIC,
        2: ErrorKind.ARITHMETIC,
        3: ErrorKind.ARITHMETIC,
        4: ErrorKind.PRECONDITION,
        5: ErrorKind.ARITHMETIC,
        10: ErrorKind.PRECONDITION,
        11: ErrorKind.PRECONDITION,
        20: ErrorKind.DEGENERATE,
        30: ErrorKind.PARSE,
        40: ErrorKind.USAGE,
    }

    def __init__(self, code: int, **context: Any):
        self._code = code
        self._message = self._message_for_code[code].format(**context)
        self._context = context
        self._kind = self._kind_for_code[code]
        super().__init__(self._message)

    @classmethod
    def division_by_zero(cls):
        return cls(code=1)

    @classmethod
    def zero_polynomial_divisor(cls):
        return cls(code=2)

    @classmethod
    def zero_polynomial_input(cls):
        return cls(code=3)

    @classmethod
    def degree_too_low(cls, degree: Any, minimum: int):
        return cls(code=4, degree=degree, minimum=minimum)

    @classmethod
    def zero_to_negative_power(cls):
        return cls(code=5)

    @classmethod
    def precondition_failed(cls, family: str, condition: str):
        return cls(code=10, family=family, condition=condition)

    @classmethod
    def family_mismatch(cls, family: str):
        return cls(code=11, family=family)

    @classmethod
    def zero_divisor(cls, divisor: str):
        return cls(code=20, divisor=divisor)

    @classmethod
    def usage(cls, reason: str):
        return cls(code=40, reason=reason)

    @property
    def context(self) -> dict:
        return self._context

    @property
    def code(self) -> int:
        return self._code

    @property
    def message(self) -> str:
        return self._message

    @property
    def kind(self) -> ErrorKind:
        return self._kind


class ParseError(DiscriminantError):
    def __init__(self, reason: str, position: int, text: Optional[str] = None):
        super().__init__(code=30, reason=reason, position=position)
        self._position = position
        self._text = text

    @property
    def position(self) -> int:
        return self._position

    @property
    def text(self) -> Optional[str]:
        return self._text

    def pointer(self) -> str:
        """Renders the offending input with a caret under the failing position."""
        if self._text is None:
            return self.message
        return f"{self._text}\n{' ' * self._position}^\n{self.message}"
