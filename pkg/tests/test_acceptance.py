"""Acceptance criteria, one test each.

Every test prints a single line "PASS|FAIL  <n>  <name>  <seconds> / <limit>"
straight to the terminal, so the lines show up in a plain `pytest -v` run.
"""

import time
from contextlib import contextmanager
from math import comb

import pytest

from sepoly.closed_forms import check_recursion, gamma_closed, hstar_closed, hstar_double_sum, hstar_via_colorings
from sepoly.complex import build_nevo_complex, check_balanced, f_polynomial
from sepoly.ehrhart import count_lattice_points, count_lattice_points_bipartite, hstar_bipartite_interpolated
from sepoly.facets import count_facets_multipartite, enumerate_facets, facet_volume_from_function
from sepoly.graph import complete_graph, make_complete_bipartite, make_complete_multipartite
from sepoly.groebner import (
    bipartite_triangulation,
    face_to_arrows,
    generate_gb,
    verify_gb_divisibility,
)
from sepoly.poly import ExactPolynomial, gamma_extract, interlaces, is_real_rooted
from sepoly.trees import enumerate_T, hstar_via_trees, ingoing_count, ingoing_count_closed, planar_spanning_tree_count


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, name, limit):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            dt = time.perf_counter() - t0
            ok = ok and dt < limit
            with capsys.disabled():
                print(f"\n{'PASS' if ok else 'FAIL'}  {number:2}  {name}  {dt:.2f}s / {limit}s")
        assert dt < limit, f"criterion {number} took {dt:.2f}s, limit {limit}s"

    return run


def partitions(n, k, largest=None):
    """Non-increasing k-part vectors of positive integers summing to n."""
    largest = n if largest is None else largest
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n - k + 1, largest), 0, -1):
        for rest in partitions(n - first, k - 1, first):
            yield (first,) + rest


def test_01_facet_counts(criterion):
    with criterion(1, "facet counts", 10):
        for a in range(1, 7):
            for b in range(1, 7):
                assert len(enumerate_facets(make_complete_bipartite(a, b))) == 2**a + 2**b - 2
        for k in (3, 4):
            for n in range(k, 9):
                for parts in partitions(n, k):
                    got = len(enumerate_facets(make_complete_multipartite(parts)))
                    assert got == count_facets_multipartite(parts), parts


def test_02_hstar_four_way(criterion):
    with criterion(2, "h* agreement", 60):
        for a in range(4):
            for b in range(4):
                h = hstar_closed(a, b)
                assert hstar_double_sum(a, b) == h
                assert hstar_via_colorings(a, b) == h
                assert hstar_via_trees(a, b) == h
                assert hstar_bipartite_interpolated(a, b, "bipartite") == h
                if a <= 2 and b <= 2:
                    assert hstar_bipartite_interpolated(a, b, "generic") == h


def test_03_specific_values(criterion):
    with criterion(3, "specific values", 1):
        assert hstar_closed(1, 1) == ExactPolynomial([1, 5, 5, 1])
        g = make_complete_bipartite(2, 2)
        assert [count_lattice_points(g, n) for n in (1, 2)] == [9, 35]
        assert [count_lattice_points_bipartite(2, 2, n) for n in (1, 2)] == [9, 35]


def test_04_gamma(criterion):
    with criterion(4, "gamma extraction", 5):
        for a in range(11):
            for b in range(11):
                g = gamma_extract(hstar_closed(a, b), a + b + 1)
                want = [comb(2 * i, i) * comb(a, i) * comb(b, i) for i in range(min(a, b) + 1)]
                assert g is not None and list(g.coeffs) == want
                assert all(c > 0 for c in g.coeffs)


def test_05_real_roots_interlacing(criterion):
    with criterion(5, "real-rooted and interlacing", 120):
        for a in range(11):
            for b in range(1, 11):
                h = hstar_closed(a, b)
                assert is_real_rooted(h), (a, b)
                assert interlaces(hstar_closed(a, b - 1), h), (a, b)


def test_06_recursion(criterion):
    with criterion(6, "recursion", 5):
        for a in range(1, 13):
            for b in range(1, 13):
                assert check_recursion(a, b), (a, b)


def test_07_half_open(criterion):
    with criterion(7, "ingoing statistic", 30):
        for a in range(4):
            for b in range(4):
                ts = enumerate_T(a, b)
                assert all(ingoing_count(t) == ingoing_count_closed(t) for t in ts)
                assert len(ts) == hstar_closed(a, b)(1)


def test_08_planar_trees(criterion):
    with criterion(8, "planar trees and facet volumes", 30):
        for a in range(6):
            for b in range(6):
                assert planar_spanning_tree_count(a, b) == comb(a + b, b)
        for a in range(4):
            for b in range(4):
                fs = enumerate_facets(make_complete_bipartite(a + 1, b + 1))
                assert sum(facet_volume_from_function(f, a, b) for f in fs) == hstar_closed(a, b)(1)


def test_09_nevo_complex(criterion):
    with criterion(9, "flag complex", 10):
        for a in range(1, 6):
            for b in range(1, 6):
                c = build_nevo_complex(a, b)
                assert f_polynomial(c) == gamma_closed(a, b)
                assert check_balanced(c)


def test_10_groebner(criterion):
    with criterion(10, "Groebner spot checks", 60):
        for g in (complete_graph(2), complete_graph(3), make_complete_bipartite(2, 2), make_complete_bipartite(2, 3)):
            assert verify_gb_divisibility(g, generate_gb(g), 4)
        for g in (complete_graph(3), make_complete_bipartite(2, 2)):
            basis = generate_gb(g)
            for dropped in basis:
                rep = verify_gb_divisibility(g, [x for x in basis if x != dropped], 4)
                assert not rep and rep.witness is not None
        for a in range(3):
            for b in range(3):
                c = bipartite_triangulation(a + 1, b + 1)
                assert {face_to_arrows(c, f, a + 1) for f in c.facets()} == {t.edges for t in enumerate_T(a, b)}
