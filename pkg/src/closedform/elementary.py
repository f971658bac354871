from math import gcd

from src.constants import Family
from src.error import DiscriminantError
from src.exact.combinatorics import sign_pow
from src.exact.gaussian import GaussianLike, GaussianRational

_coerce = GaussianRational.coerce


def disc_binomial(n: int, a: GaussianLike) -> GaussianRational:
    """
    Δ(x^n + a) = (-1)^(n(n-1)/2) * n^n * a^(n-1). For ``n = 1`` the value is 1.
    """
    a = _coerce(a)
    if n < 1:
        raise DiscriminantError.precondition_failed(str(Family.BINOMIAL), "n >= 1")
    if a.is_zero():
        raise DiscriminantError.precondition_failed(str(Family.BINOMIAL), "a != 0")
    return a ** (n - 1) * (n**n * sign_pow(n * (n - 1) // 2))


def disc_trinomial(n: int, k: int, a: GaussianLike, b: GaussianLike) -> GaussianRational:
    """
    Δ(x^n + a x^k + b) with ``d = gcd(n - k, k)``:

    (-1)^(n(n-1)/2) * b^(k-1)
        * (b^((n-k)/d) n^(n/d) + (-1)^(n/d+1) a^(n/d) k^(k/d) (n-k)^((n-k)/d))^d
    """
    a, b = _coerce(a), _coerce(b)
    family = str(Family.TRINOMIAL)
    if n < 3:
        raise DiscriminantError.precondition_failed(family, "n >= 3")
    if not 0 < k < n:
        raise DiscriminantError.precondition_failed(family, "n > k > 0")
    if a.is_zero() or b.is_zero():
        raise DiscriminantError.precondition_failed(family, "ab != 0")
    d = gcd(n - k, k)
    inner = b ** ((n - k) // d) * n ** (n // d) + a ** (n // d) * (
        sign_pow(n // d + 1) * k ** (k // d) * (n - k) ** ((n - k) // d)
    )
    return b ** (k - 1) * inner**d * sign_pow(n * (n - 1) // 2)


def disc_cubic(a: GaussianLike, b: GaussianLike, c: GaussianLike) -> GaussianRational:
    """Δ(x^3 + a x^2 + b x + c) = -4a^3c + a^2b^2 - 4b^3 + 18abc - 27c^2"""
    a, b, c = _coerce(a), _coerce(b), _coerce(c)
    return (
        -4 * a**3 * c
        + a**2 * b**2
        - 4 * b**3
        + 18 * a * b * c
        - 27 * c**2
    )


def disc_quartic_k3(a: GaussianLike, b: GaussianLike, c: GaussianLike) -> GaussianRational:
    """Δ(x^4 + a x^3 + b x + c) = -4a^3b^3 - 27a^4c^2 - 6a^2b^2c - 27b^4 - 192abc^2 + 256c^3"""
    a, b, c = _coerce(a), _coerce(b), _coerce(c)
    return (
        -4 * a**3 * b**3
        - 27 * a**4 * c**2
        - 6 * a**2 * b**2 * c
        - 27 * b**4
        - 192 * a * b * c**2
        + 256 * c**3
    )


def disc_quartic_depressed(
    a: GaussianLike, b: GaussianLike, c: GaussianLike
) -> GaussianRational:
    """Δ(x^4 + a x^2 + b x + c) = 16a^4c - 4a^3b^2 - 128a^2c^2 + 144ab^2c - 27b^4 + 256c^3"""
    a, b, c = _coerce(a), _coerce(b), _coerce(c)
    return (
        16 * a**4 * c
        - 4 * a**3 * b**2
        - 128 * a**2 * c**2
        + 144 * a * b**2 * c
        - 27 * b**4
        + 256 * c**3
    )
