"""Closed forms for h* and gamma of P_{K_{a+1,b+1}}.

Indices follow the shifted convention: ``hstar_closed(a, b)`` is the
h*-polynomial of the complete bipartite graph with parts of size a+1 and b+1.
"""

from __future__ import annotations

from enum import IntEnum
from math import comb

from . import kernels
from .errors import DomainError, ResourceLimitError
from .poly import ONE_PLUS_T, ExactPolynomial, one_plus_t_power

MAX_COLORING_ELEMENTS = 16


class Color(IntEnum):
    RED = 0
    GREEN = 1
    WHITE = 2
    BLACK = 3


def binom(n: int, k: int, minus_one_convention: bool = False) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n.

    With ``minus_one_convention`` the single exception C(-1, -1) = 1 is made
    (and C(n, -1) = 0 otherwise); the tree-count sums for trees whose centre
    has an edgeless side rely on it. Everything else uses the plain rule.
    """
    if k == -1 and minus_one_convention:
        return 1 if n == -1 else 0
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _check(a: int, b: int) -> None:
    if a < 0 or b < 0:
        raise DomainError(f"indices must be non-negative, got ({a}, {b})")


def gamma_closed(a: int, b: int) -> ExactPolynomial:
    _check(a, b)
    return ExactPolynomial(comb(2 * i, i) * comb(a, i) * comb(b, i) for i in range(min(a, b) + 1))


def hstar_closed(a: int, b: int) -> ExactPolynomial:
    """sum_i C(2i,i) C(a,i) C(b,i) t^i (1+t)^(a+b+1-2i), fully expanded."""
    _check(a, b)
    d = a + b + 1
    acc = ExactPolynomial([])
    for i, g in enumerate(gamma_closed(a, b).coeffs):
        acc = acc + one_plus_t_power(d - 2 * i).shift(i) * g
    return acc


def hstar_double_sum(a: int, b: int) -> ExactPolynomial:
    """(1+t) sum_{i,j} C(a,i) C(b,j) C(a-i+j, j) C(b+i-j, i) t^(i+j)."""
    _check(a, b)
    coeffs = [0] * (a + b + 1)
    for i in range(a + 1):
        for j in range(b + 1):
            coeffs[i + j] += comb(a, i) * comb(b, j) * binom(a - i + j, j) * binom(b + i - j, i)
    return ONE_PLUS_T * ExactPolynomial(coeffs)


def is_good_coloring(colors_a, colors_b) -> bool:
    red_a = sum(1 for c in colors_a if c == Color.RED)
    green_a = sum(1 for c in colors_a if c == Color.GREEN)
    red_b = sum(1 for c in colors_b if c == Color.RED)
    green_b = sum(1 for c in colors_b if c == Color.GREEN)
    return red_a == green_b and green_a == red_b


def hstar_via_colorings(a: int, b: int, use_numba: bool | None = None) -> ExactPolynomial:
    """(1+t) times the sum of t^(g(c)+w(c)) over all good 4-colorings of A+B."""
    _check(a, b)
    if a + b > MAX_COLORING_ELEMENTS:
        raise ResourceLimitError(
            f"4^{a + b} colorings exceed the enumeration guard (a+b <= {MAX_COLORING_ELEMENTS})"
        )
    if a + b == 0:
        return ONE_PLUS_T
    return ONE_PLUS_T * ExactPolynomial(kernels.coloring_histogram(a, b, use_numba=use_numba))


def check_recursion(a: int, b: int) -> bool:
    """(b-a) h*_{a,b} == (1+t) (b h*_{a,b-1} - a h*_{a-1,b})."""
    if a < 1 or b < 1:
        raise DomainError("recursion is stated for a, b >= 1")
    lhs = hstar_closed(a, b) * (b - a)
    rhs = ONE_PLUS_T * (hstar_closed(a, b - 1) * b - hstar_closed(a - 1, b) * a)
    return lhs == rhs
