from fractions import Fraction
from typing import Callable, Optional

from src.exact.combinatorics import even_binomial_ratios
from src.exact.gaussian import GaussianRational, gaussian_int_mul


def binomial_power_sum(
    s: int,
    h: GaussianRational,
    d: GaussianRational,
    weight: Optional[Callable[[int], Fraction]] = None,
) -> GaussianRational:
    """
    ``sum_{i=0}^{s//2} C(s, 2i) * w(i) * h^(s-2i) * d^i`` with ``w`` defaulting to 1.

    With ``h = (e1 / 2)`` and ``d = (e1 / 2)^2 - e2`` this is half the power sum
    ``z1^s + z2^s`` of the roots of ``z^2 - e1 z + e2``.

    The terms are accumulated over one common integer denominator. Writing ``h = H / h_den``
    and ``d = D / d_den``, every term is an integer multiple of ``P^(K-i) * Q^i`` with
    ``P = H^2 * d_den`` and ``Q = D * h_den^2`` (``K = s // 2``), and consecutive weights
    differ by a small rational ratio, so the sum is built inside out with only
    big-by-small products and normalized once at the end.
    """
    if s < 0:
        raise ValueError("'s' must be non-negative")
    top = s // 2
    first = weight(0) if weight is not None else Fraction(1)

    h_re, h_im, h_den = h.re_num, h.im_num, h.den
    d_re, d_im, d_den = d.re_num, d.im_num, d.den
    p_re, p_im = gaussian_int_mul(h_re, h_im, h_re, h_im)
    p_re, p_im = p_re * d_den, p_im * d_den
    q_re, q_im = d_re * h_den * h_den, d_im * h_den * h_den

    ratios = list(even_binomial_ratios(s, weight))
    acc_re, acc_im = 1, 0
    scale_re, scale_im = 1, 0
    ratio_den = 1
    for i in range(top, 0, -1):
        ratio = ratios[i - 1]
        scale_re, scale_im = gaussian_int_mul(scale_re, scale_im, p_re, p_im)
        scale_re, scale_im = scale_re * ratio.denominator, scale_im * ratio.denominator
        term_re, term_im = gaussian_int_mul(acc_re, acc_im, q_re, q_im)
        acc_re = scale_re + ratio.numerator * term_re
        acc_im = scale_im + ratio.numerator * term_im
        ratio_den *= ratio.denominator

    if s - 2 * top:
        acc_re, acc_im = gaussian_int_mul(acc_re, acc_im, h_re, h_im)
    acc_re, acc_im = acc_re * first.numerator, acc_im * first.numerator
    den = first.denominator * ratio_den * h_den**s * d_den**top
    return GaussianRational(acc_re, acc_im, den)
