from dataclasses import dataclass
from typing import Any, Optional

from typing_extensions import Self

from src.constants import Family
from src.error import DiscriminantError
from src.exact.gaussian import GaussianRational
from src.poly.polynomial import Polynomial

QUADRINOMIAL_FAMILIES = (
    Family.K2,
    Family.K3,
    Family.K_N_MINUS_1,
    Family.RECIP_N2,
    Family.RECIP_N3,
    Family.TWO_N,
)

# smallest admissible n per family
_MIN_N = {
    Family.K2: 4,
    Family.K3: 5,
    Family.K_N_MINUS_1: 5,
    Family.RECIP_N2: 4,
    Family.RECIP_N3: 6,
}


@dataclass(frozen=True)
class QuadrinomialSpec:
    """
    Tagged quadrinomial ``x^N + a x^k + b x^l + c``. The exponents follow from the family:

    - k2: ``x^n + a x^2 + b x + c``
    - k3: ``x^n + a x^3 + b x + c``
    - knm1: ``x^n + a x^(n-1) + b x + c``
    - recip2: ``x^n + a x^(n-1) + b x^(n-2) + c``
    - recip3: ``x^n + a x^(n-1) + b x^(n-3) + c``
    - two_n: ``x^(2n) + a x^n + b x^l + c``
    """

    family: Family
    n: int
    a: GaussianRational
    b: GaussianRational
    c: GaussianRational
    l: Optional[int] = None  # noqa: E741

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family not in QUADRINOMIAL_FAMILIES:
            raise ValueError(f"{self.family!r} is not a quadrinomial family")
        if not isinstance(self.n, int):
            raise TypeError("'n' must be an integer")
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, GaussianRational.coerce(getattr(self, name)))

        if self.a.is_zero() or self.b.is_zero() or self.c.is_zero():
            raise DiscriminantError.precondition_failed(str(self.family), "abc != 0")
        if self.family == Family.TWO_N:
            if self.l is None or self.l < 1:
                raise DiscriminantError.precondition_failed(str(self.family), "l >= 1")
            if self.n <= 2 * self.l:
                raise DiscriminantError.precondition_failed(str(self.family), "n > 2l")
            if self.a * self.a == self.c * 4:
                raise DiscriminantError.precondition_failed(str(self.family), "a^2 != 4c")
        else:
            if self.l is not None:
                raise ValueError(f"'l' is only used by the {Family.TWO_N} family")
            minimum = _MIN_N[self.family]
            if self.n < minimum:
                raise DiscriminantError.precondition_failed(
                    str(self.family), f"n > {minimum - 1}"
                )

    @classmethod
    def create(
        cls, family: Any, n: int, a: Any, b: Any, c: Any, l: Optional[int] = None  # noqa: E741
    ) -> Self:
        return cls(family=Family(family), n=n, a=a, b=b, c=c, l=l)

    @property
    def exponents(self) -> tuple[int, int, int]:
        """``(degree, k, l)`` of the family member."""
        n = self.n
        match self.family:
            case Family.K2:
                return n, 2, 1
            case Family.K3:
                return n, 3, 1
            case Family.K_N_MINUS_1:
                return n, n - 1, 1
            case Family.RECIP_N2:
                return n, n - 1, n - 2
            case Family.RECIP_N3:
                return n, n - 1, n - 3
        assert self.l is not None
        return 2 * n, n, self.l

    @property
    def degree(self) -> int:
        return self.exponents[0]


def expand(spec: QuadrinomialSpec) -> Polynomial:
    degree, k, l = spec.exponents  # noqa: E741
    return Polynomial.from_terms({degree: 1, k: spec.a, l: spec.b, 0: spec.c})
