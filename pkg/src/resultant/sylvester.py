import logging
from math import lcm
from typing import Any

from src.error import DiscriminantError
from src.exact.gaussian import ZERO, GaussianRational, gaussian_int_mul
from src.poly.polynomial import Polynomial

logger = logging.getLogger(__name__)


class SylvesterMatrix:
    """
    Sylvester matrix of ``f`` (degree n) and ``g`` (degree m): the first m rows are shifted
    copies of the coefficients of ``f`` from the leading one down, the last n rows are shifted
    copies of the coefficients of ``g``.
    """

    def __init__(self, f: Polynomial, g: Polynomial):
        if f.is_zero() or g.is_zero():
            raise DiscriminantError.zero_polynomial_input()
        n, m = int(f.degree), int(g.degree)
        if n + m < 1:
            raise DiscriminantError.degree_too_low(degree=n + m, minimum=1)
        self._n = n
        self._m = m
        dim = n + m
        f_desc = f.coeffs[::-1]
        g_desc = g.coeffs[::-1]
        rows: list[tuple[GaussianRational, ...]] = []
        for i in range(m):
            rows.append((ZERO,) * i + f_desc + (ZERO,) * (dim - i - n - 1))
        for j in range(n):
            rows.append((ZERO,) * j + g_desc + (ZERO,) * (dim - j - m - 1))
        self._rows = tuple(rows)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def dim(self) -> int:
        return self._n + self._m

    @property
    def rows(self) -> tuple[tuple[GaussianRational, ...], ...]:
        return self._rows

    def __getitem__(self, item: tuple[int, int]) -> GaussianRational:
        i, j = item
        return self._rows[i][j]

    def det(self) -> GaussianRational:
        return det(self._rows)

    def __repr__(self) -> str:
        return f"SylvesterMatrix(n={self._n}, m={self._m})"


def sylvester(f: Polynomial, g: Polynomial) -> SylvesterMatrix:
    return SylvesterMatrix(f, g)


def det(matrix: Any) -> GaussianRational:
    """
    Exact determinant of a square matrix over Q(i).

    Entries are cleared to a common integer denominator ``L`` and the scaled matrix is
    reduced with fraction-free Bareiss elimination over the Gaussian integers, so
    ``det(M) = det(L * M) / L ** N``. Pivoting takes the first non-zero entry of the column.
    """
    if isinstance(matrix, SylvesterMatrix):
        matrix = matrix.rows
    rows: list[list[GaussianRational]] = [
        [GaussianRational.coerce(entry) for entry in row] for row in matrix
    ]
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise ValueError("determinant requires a square matrix")
    if size == 0:
        return GaussianRational(1)

    common = 1
    for row in rows:
        for entry in row:
            common = lcm(common, entry.den)
    re_rows = [[entry.re_num * (common // entry.den) for entry in row] for row in rows]
    im_rows = [[entry.im_num * (common // entry.den) for entry in row] for row in rows]

    if all(value == 0 for row in im_rows for value in row):
        logger.debug("bareiss over the integers, size %d", size)
        value_re, value_im = _bareiss_integer(re_rows), 0
    else:
        logger.debug("bareiss over the Gaussian integers, size %d", size)
        value_re, value_im = _bareiss_gaussian(re_rows, im_rows)
    return GaussianRational._from_parts(value_re, value_im, common**size)


def _bareiss_integer(matrix: list[list[int]]) -> int:
    size = len(matrix)
    sign = 1
    previous = 1
    for k in range(size - 1):
        if matrix[k][k] == 0:
            for i in range(k + 1, size):
                if matrix[i][k] != 0:
                    matrix[k], matrix[i] = matrix[i], matrix[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = matrix[k]
        pivot = pivot_row[k]
        for i in range(k + 1, size):
            row = matrix[i]
            head = row[k]
            if head == 0:
                for j in range(k + 1, size):
                    if row[j]:
                        row[j] = row[j] * pivot // previous
            else:
                for j in range(k + 1, size):
                    row[j] = (row[j] * pivot - head * pivot_row[j]) // previous
        previous = pivot
    return sign * matrix[size - 1][size - 1]


def _gaussian_exact_quotient(re: int, im: int, div_re: int, div_im: int) -> tuple[int, int]:
    if div_im == 0:
        return re // div_re, im // div_re
    norm = div_re * div_re + div_im * div_im
    return (re * div_re + im * div_im) // norm, (im * div_re - re * div_im) // norm


def _bareiss_gaussian(re_rows: list[list[int]], im_rows: list[list[int]]) -> tuple[int, int]:
    size = len(re_rows)
    sign = 1
    previous = (1, 0)
    for k in range(size - 1):
        if re_rows[k][k] == 0 and im_rows[k][k] == 0:
            for i in range(k + 1, size):
                if re_rows[i][k] != 0 or im_rows[i][k] != 0:
                    re_rows[k], re_rows[i] = re_rows[i], re_rows[k]
                    im_rows[k], im_rows[i] = im_rows[i], im_rows[k]
                    sign = -sign
                    break
            else:
                return 0, 0
        pivot_re_row, pivot_im_row = re_rows[k], im_rows[k]
        pivot_re, pivot_im = pivot_re_row[k], pivot_im_row[k]
        for i in range(k + 1, size):
            row_re, row_im = re_rows[i], im_rows[i]
            head_re, head_im = row_re[k], row_im[k]
            for j in range(k + 1, size):
                x_re, x_im = row_re[j], row_im[j]
                if head_re == 0 and head_im == 0:
                    if x_re == 0 and x_im == 0:
                        continue
                    e_re, e_im = gaussian_int_mul(x_re, x_im, pivot_re, pivot_im)
                else:
                    e_re, e_im = gaussian_int_mul(x_re, x_im, pivot_re, pivot_im)
                    h_re, h_im = gaussian_int_mul(
                        head_re, head_im, pivot_re_row[j], pivot_im_row[j]
                    )
                    e_re, e_im = e_re - h_re, e_im - h_im
                row_re[j], row_im[j] = _gaussian_exact_quotient(e_re, e_im, *previous)
        previous = (pivot_re, pivot_im)
    last_re, last_im = re_rows[size - 1][size - 1], im_rows[size - 1][size - 1]
    return sign * last_re, sign * last_im


def resultant_sylvester(f: Polynomial, g: Polynomial) -> GaussianRational:
    """``R(f, g) = det(Syl(f, g))``"""
    return SylvesterMatrix(f, g).det()
