from fractions import Fraction
from math import comb

import mpmath
import pytest
from hypothesis import assume, given, settings, strategies as st

from sepoly.errors import DomainError, InconsistentCountsError
from sepoly.poly import (
    ExactPolynomial,
    RationalPolynomial,
    SturmChain,
    ehrhart_from_hstar,
    from_roots,
    gamma_assemble,
    gamma_extract,
    hstar_from_counts,
    interlaces,
    is_gamma_positive,
    is_log_concave,
    is_palindromic,
    is_real_rooted,
    is_unimodal,
    isolate_roots,
    exact_quotient,
    poly_gcd,
    render,
    squarefree_decomposition,
    squarefree_part,
    sturm_real_root_count,
)

small_ints = st.integers(-20, 20)


def P(*c):
    return ExactPolynomial(c)


def test_render():
    assert render([1, 5, 5, 1]) == "1 + 5t + 5t^2 + t^3"
    assert str(P(0, -1, 0, 2)) == "-t + 2t^3"
    assert str(P()) == "0"


def test_arithmetic():
    assert P(1, 1) * P(1, 1) == P(1, 2, 1)
    assert P(1, 1) ** 3 == P(1, 3, 3, 1)
    assert P(1, 2, 1).derivative() == P(2, 2)
    assert P(1, 1).shift(2) == P(0, 0, 1, 1)
    assert P(3, 0, 1)(2) == 7


def test_json_round_trip_big_integers():
    p = P(10**40, -3, 7)
    assert ExactPolynomial.from_json(p.to_json()) == p
    assert p.to_json()["coeffs"][0] == str(10**40)


def test_rational_division():
    f = RationalPolynomial([Fraction(-1), 0, 1])
    q, r = f.divmod(RationalPolynomial([1, 1]))
    assert q == RationalPolynomial([-1, 1]) and r.is_zero()


def test_gcd():
    assert poly_gcd(P(1, 2, 1), P(1, 1) * P(2, 1)) == P(1, 1)


# binomial basis


def test_hstar_from_counts_examples():
    # the unit interval [0, 1]: E(n) = n + 1, h* = 1
    assert hstar_from_counts([1, 2], 1) == P(1)
    # [-1, 1]: E(n) = 2n + 1, h* = 1 + t
    assert hstar_from_counts([1, 3], 1) == P(1, 1)


def test_hstar_from_counts_more_examples():
    assert hstar_from_counts([1, 9, 35, 91], 3) == P(1, 5, 5, 1)
    for d in range(6):
        simplex = [comb(n + d, d) for n in range(d + 1)]
        assert hstar_from_counts(simplex, d) == P(1)


def test_hstar_from_counts_rejects_non_integer_solution():
    # integer counts always give integer h* (the system is unitriangular)
    with pytest.raises(InconsistentCountsError):
        hstar_from_counts([1, Fraction(5, 2)], 1)


def test_hstar_from_counts_wrong_length():
    with pytest.raises(DomainError):
        hstar_from_counts([1, 2, 3], 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(0, 50), min_size=d + 1, max_size=d + 1))))
def test_hstar_counts_round_trip(data):
    d, h = data
    hp = ExactPolynomial(h)
    counts = [ehrhart_from_hstar(hp, d, n) for n in range(d + 1)]
    assert hstar_from_counts(counts, d) == hp


# gamma vectors


def test_gamma_of_palindromes():
    assert gamma_extract(P(1, 5, 5, 1), 3) == P(1, 2)
    assert gamma_extract(P(1, 1), 1) == P(1)
    # 1 + t^2 = (1+t)^2 - 2t
    assert gamma_extract(P(1, 0, 1), 2) == P(1, -2)
    assert not is_gamma_positive(gamma_extract(P(1, 0, 1), 2))


def test_gamma_rejects_non_palindromic():
    with pytest.raises(DomainError):
        gamma_extract(P(1, 2), 1)


def test_gamma_with_negative_entry():
    # 2 + 3t + 2t^2 = 2(1+t)^2 - t
    assert gamma_extract(ExactPolynomial([2, 3, 2]), 2) == P(2, -1)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 9).flatmap(lambda d: st.tuples(st.just(d), st.lists(small_ints, min_size=d // 2 + 1, max_size=d // 2 + 1))))
def test_gamma_round_trip(data):
    d, g = data
    assume(g[0] != 0 or any(g))
    gamma = ExactPolynomial(g)
    p = gamma_assemble(gamma, d)
    assume(not p.is_zero())
    assert is_palindromic(p, d)
    assert gamma_extract(p, d) == gamma


def test_unimodal_and_log_concave():
    assert is_unimodal(P(1, 3, 3, 1)) and is_log_concave(P(1, 3, 3, 1))
    assert not is_unimodal(P(1, 0, 1))
    assert not is_log_concave(P(1, 1, 5))


# Sturm sequences, isolation, interlacing


def test_sturm_counts():
    assert sturm_real_root_count(P(-2, 0, 1)) == 2
    assert sturm_real_root_count(P(1, 0, 1)) == 0
    assert sturm_real_root_count(P(1, 2, 1)) == 1  # distinct roots
    assert SturmChain.of(P(-2, 0, 1)).count_in(Fraction(0), Fraction(2)) == 1


def test_squarefree_decomposition():
    p = P(1, 1) ** 3 * P(-2, 1)
    dec = dict((m, f) for f, m in squarefree_decomposition(p))
    assert dec[3] == P(1, 1) and dec[1] == P(-2, 1)


def test_real_rootedness():
    assert is_real_rooted(P(1, 5, 5, 1))
    assert is_real_rooted(P(1, 2, 1))
    assert not is_real_rooted(P(1, 0, 1))
    assert is_real_rooted(P(7))


def test_isolation_of_double_and_rational_roots():
    iso = isolate_roots(P(1, 2, 1))
    assert iso.intervals == ((Fraction(-1), Fraction(-1), 2),)
    iso = isolate_roots(P(0, 1, 1))
    assert [(lo, hi) for lo, hi, _ in iso.intervals] == [(-1, -1), (0, 0)]


def test_isolation_contains_mpmath_roots():
    p = P(1, 5, 5, 1)
    iso = isolate_roots(p).refined(Fraction(1, 10**6))
    roots = sorted(float(mpmath.re(r)) for r in mpmath.polyroots(list(reversed(p.coeffs))))
    for (lo, hi, _), r in zip(iso.intervals, roots):
        assert lo <= Fraction(r) + Fraction(1, 10**9) and Fraction(r) - Fraction(1, 10**9) <= hi


def test_isolation_rejects_complex_roots():
    with pytest.raises(DomainError):
        isolate_roots(P(1, 0, 1))


def test_interlacing_examples():
    f = P(1, 5, 5, 1)
    assert interlaces(f.derivative(), f)
    assert interlaces(P(1, 1), P(1, 2, 1))  # shared root -1
    assert not interlaces(P(1, 1, 0, 0), f)
    # roots of f: 0, -2; g with root -3 lies outside
    assert not interlaces(P(3, 1), P(0, 2, 1))
    assert interlaces(P(1, 1), P(0, 2, 1))
    assert interlaces(P(2), P(1, 1))  # constant interlaces vacuously


def test_interlacing_requires_real_roots():
    with pytest.raises(DomainError):
        interlaces(P(1, 1), P(1, 0, 1))


def _interlace_oracle(g_roots, f_roots):
    a = sorted(f_roots, reverse=True)
    b = sorted(g_roots, reverse=True)
    if not (len(b) <= len(a) <= len(b) + 1):
        return False
    merged = []
    for i, x in enumerate(a):
        merged.append(x)
        if i < len(b):
            merged.append(b[i])
    return all(x >= y for x, y in zip(merged, merged[1:]))


roots_strategy = st.lists(st.integers(-6, 6).map(lambda k: Fraction(k, 2)), min_size=1, max_size=5)


@settings(max_examples=150, deadline=None)
@given(roots_strategy, roots_strategy)
def test_interlacing_against_root_lists(fr, gr):
    f = from_roots(fr).primitive()
    g = from_roots(gr).primitive()
    assert interlaces(g, f) == _interlace_oracle(gr, fr)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-8, 8), min_size=2, max_size=6, unique=True))
def test_derivative_interlaces(roots):
    f = from_roots(roots).primitive()
    assert interlaces(f.derivative(), f)


@settings(max_examples=60, deadline=None)
@given(st.lists(small_ints, min_size=2, max_size=7))
def test_real_root_count_against_mpmath(coeffs):
    p = ExactPolynomial(coeffs)
    assume(p.degree >= 1)
    sq = squarefree_part(p)
    with mpmath.workdps(60):
        found = mpmath.polyroots(list(reversed(sq.coeffs)), maxsteps=500, extraprec=500)
        real = [r for r in found if abs(mpmath.im(r)) < mpmath.mpf(10) ** -30]
    assert sturm_real_root_count(p) == len(real)


def test_binomial_expansion_is_gamma_positive():
    for d in range(8):
        p = ExactPolynomial(comb(d, k) for k in range(d + 1))
        assert gamma_extract(p, d) == P(1)


def euclid_gcd(f, g):
    """Textbook Euclid over Fraction lists, normalised to a primitive integer polynomial."""
    def rem(a, b):
        a = list(a)
        while len(a) >= len(b) and any(a):
            c = a[-1] / b[-1]
            s = len(a) - len(b)
            for j, y in enumerate(b):
                a[s + j] -= c * y
            while a and a[-1] == 0:
                a.pop()
        return a

    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    while b:
        a, b = b, rem(a, b)
    return RationalPolynomial(a).primitive()


small_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=5).map(lambda c: P(*c))


@settings(max_examples=150, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_gcd_matches_euclid(common, f, g):
    assume(not common.is_zero() and not f.is_zero() and not g.is_zero())
    a, b = common * f, common * g
    want = euclid_gcd(a, b)
    want = -want if want.leading < 0 else want
    got = poly_gcd(a, b)
    assert got == want
    assert exact_quotient(a, got) * RationalPolynomial(got.coeffs) == RationalPolynomial(a.coeffs)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_sturm_count_of_products_of_linear_factors(roots):
    # distinct integer roots, times an irreducible quadratic with no real roots
    p = P(1)
    for r in set(roots):
        p = p * P(-r, 1)
    assert sturm_real_root_count(p * P(1, 0, 1)) == len(set(roots))
