from itertools import product
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sepoly import kernels
from sepoly.closed_forms import (
    Color,
    binom,
    check_recursion,
    gamma_closed,
    hstar_closed,
    hstar_double_sum,
    hstar_via_colorings,
    is_good_coloring,
)
from sepoly.errors import DomainError, ResourceLimitError
from sepoly.facets import enumerate_facets, facet_matrix
from sepoly.graph import complete_graph, make_complete_bipartite
from sepoly.poly import ExactPolynomial, gamma_extract, interlaces, is_real_rooted


def colorings_by_hand(a, b):
    """Direct enumeration over Color tuples, independent of the kernels."""
    hist = [0] * (a + b + 1)
    for ca in product(Color, repeat=a):
        for cb in product(Color, repeat=b):
            if is_good_coloring(ca, cb):
                k = sum(1 for c in ca + cb if c in (Color.GREEN, Color.WHITE))
                hist[k] += 1
    return ExactPolynomial([1, 1]) * ExactPolynomial(hist)


def test_small_values():
    assert hstar_closed(0, 0) == ExactPolynomial([1, 1])
    assert hstar_closed(1, 1) == ExactPolynomial([1, 5, 5, 1])
    assert hstar_closed(1, 2) == ExactPolynomial([1, 8, 14, 8, 1])
    assert gamma_closed(1, 1) == ExactPolynomial([1, 2])


def test_binom_conventions():
    assert binom(-1, -1) == 0
    assert binom(-1, -1, minus_one_convention=True) == 1
    assert binom(3, -1, minus_one_convention=True) == 0
    assert binom(5, 2) == 10 and binom(2, 5) == 0


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4)])
def test_four_expressions_agree(a, b):
    h = hstar_closed(a, b)
    assert hstar_double_sum(a, b) == h
    assert hstar_via_colorings(a, b) == h
    assert colorings_by_hand(a, b) == h


def test_value_at_one_is_normalized_volume():
    # h*(1) counts unimodular simplices; K_{2,2} boundary has 12
    assert hstar_closed(1, 1)(1) == 12


def test_numba_and_numpy_coloring_paths_agree():
    for a, b in [(0, 3), (2, 2), (3, 4), (5, 2)]:
        assert list(kernels.coloring_histogram(a, b, use_numba=True)) == list(kernels.coloring_histogram(a, b, use_numba=False))


def test_numba_and_numpy_box_paths_agree():
    for g, n in [(complete_graph(4), 3), (make_complete_bipartite(2, 3), 3), (complete_graph(5), 2)]:
        m = facet_matrix(enumerate_facets(g))
        assert kernels.box_count(m, n, use_numba=True) == kernels.box_count(m, n, use_numba=False)


def test_coloring_guard():
    with pytest.raises(ResourceLimitError):
        hstar_via_colorings(9, 9)


def test_negative_indices():
    with pytest.raises(DomainError):
        hstar_closed(-1, 0)
    with pytest.raises(DomainError):
        check_recursion(0, 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12))
def test_recursion(a, b):
    assert check_recursion(a, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10), st.integers(0, 10))
def test_symmetry_and_gamma(a, b):
    h = hstar_closed(a, b)
    assert h == hstar_closed(b, a)
    assert gamma_extract(h, a + b + 1) == gamma_closed(a, b)
    assert all(c > 0 for c in gamma_closed(a, b).coeffs)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 6), st.integers(1, 6))
def test_real_roots_and_interlacing(a, b):
    assert is_real_rooted(hstar_closed(a, b))
    assert interlaces(hstar_closed(a, b - 1), hstar_closed(a, b))


def test_gamma_coefficients_formula():
    for a in range(6):
        for b in range(6):
            want = [comb(2 * i, i) * comb(a, i) * comb(b, i) for i in range(min(a, b) + 1)]
            assert list(gamma_closed(a, b).coeffs) == want


def test_box_count_kernel_direct():
    # the segment P of a single edge: n*P has 2n + 1 points
    m = np.array([[0, 1], [1, 0]], dtype=np.int64)
    for n in range(5):
        assert kernels.box_count(m, n) == 2 * n + 1
