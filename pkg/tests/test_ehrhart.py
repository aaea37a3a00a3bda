import pytest

from sepoly.closed_forms import hstar_closed
from sepoly.ehrhart import (
    check_overdetermined,
    count_lattice_points,
    count_lattice_points_bipartite,
    ehrhart_counts,
    hstar_bipartite_interpolated,
    hstar_via_interpolation,
    polytope_dimension,
)
from sepoly.errors import DomainError, ResourceLimitError
from sepoly.fourier_motzkin import Inequality, count_lattice_points_vdesc, feasible, in_dilate_vdesc
from sepoly.graph import Graph, complete_graph, make_complete_bipartite, make_complete_multipartite
from sepoly.poly import ExactPolynomial, is_palindromic


def test_k22_counts_three_ways():
    g = make_complete_bipartite(2, 2)
    want = [1, 9, 35, 91]
    assert [count_lattice_points(g, n) for n in range(4)] == want
    assert [count_lattice_points_bipartite(2, 2, n) for n in range(4)] == want
    assert [count_lattice_points_vdesc(g, n) for n in range(4)] == want


@pytest.mark.parametrize(
    "g",
    [complete_graph(3), complete_graph(4), make_complete_bipartite(1, 3), make_complete_bipartite(2, 3),
     make_complete_multipartite([1, 1, 2]), Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0)))],
)
def test_box_scan_matches_vertex_description(g):
    for n in range(3):
        assert count_lattice_points(g, n) == count_lattice_points_vdesc(g, n)


def test_box_scan_matches_vertex_description_six_vertices():
    g = make_complete_bipartite(3, 3)
    assert count_lattice_points(g, 2) == count_lattice_points_vdesc(g, 2)


@pytest.mark.parametrize("a,b", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 3)])
def test_bipartite_dp_matches_box_scan(a, b):
    g = make_complete_bipartite(a, b)
    for n in range(4):
        assert count_lattice_points_bipartite(a, b, n) == count_lattice_points(g, n)


def test_hstar_k4():
    h = hstar_via_interpolation(complete_graph(4))
    assert h == ExactPolynomial([1, 9, 9, 1])
    assert check_overdetermined(complete_graph(4), h)


@pytest.mark.parametrize("g", [complete_graph(5), make_complete_multipartite([1, 2, 2]), Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0)))])
def test_hstar_palindromic_and_overdetermined(g):
    h = hstar_via_interpolation(g)
    assert is_palindromic(h, g.n_vertices - 1)
    assert check_overdetermined(g, h)


def test_path_graph_is_cross_polytope():
    # P of a path on 3 vertices is a square (cross-polytope in dim 2): h* = (1+t)^2
    assert hstar_via_interpolation(Graph(3, ((0, 1), (1, 2)))) == ExactPolynomial([1, 2, 1])


@pytest.mark.parametrize("a,b", [(0, 0), (1, 1), (2, 3), (4, 4), (6, 5)])
def test_dp_interpolation_matches_closed_form(a, b):
    assert hstar_bipartite_interpolated(a, b) == hstar_closed(a, b)


def test_dp_handles_large_graphs_quickly():
    assert count_lattice_points_bipartite(12, 12, 30) > 0


def test_dimension():
    assert polytope_dimension(make_complete_bipartite(2, 3)) == 4


def test_guards_and_errors():
    with pytest.raises(ResourceLimitError):
        count_lattice_points(complete_graph(8), 1)
    with pytest.raises(DomainError):
        count_lattice_points(Graph(3, ((0, 1),)), 1)
    with pytest.raises(DomainError):
        ehrhart_counts(complete_graph(3), 2, method="bipartite")
    assert count_lattice_points(complete_graph(3), 0) == 1


def test_fourier_motzkin_small_systems():
    # x <= 1, -x <= -2 infeasible; x <= 1, -x <= 0 feasible; strict 0 < 0 infeasible
    assert not feasible([Inequality((1,), 1), Inequality((-1,), -2)], 1)
    assert feasible([Inequality((1,), 1), Inequality((-1,), 0)], 1)
    assert not feasible([Inequality((1,), 0), Inequality((-1,), 0, strict=True)], 1)


def test_vertex_description_membership():
    g = make_complete_bipartite(2, 2)
    assert in_dilate_vdesc(g, (1, 0, -1, 0), 1)
    assert not in_dilate_vdesc(g, (1, 1, -1, -1), 1)
    assert in_dilate_vdesc(g, (0, 0, 0, 0), 0)
