"""Lattice-point counts of dilates n*P_G and h* by interpolation.

Two independent counters: a box scan over sum-zero vectors checked against the
facet list, and a dynamic programme specific to complete bipartite graphs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import kernels
from .errors import DomainError, InvariantViolation, ResourceLimitError
from .facets import enumerate_facets, facet_matrix
from .graph import Graph, is_connected, make_complete_bipartite
from .poly import ExactPolynomial, ehrhart_from_hstar, hstar_from_counts

MAX_GENERIC_VERTICES = 7


def count_lattice_points(g: Graph, n: int, use_numba: bool | None = None) -> int:
    if n < 0:
        raise DomainError("dilation must be non-negative")
    if not is_connected(g):
        raise DomainError("graph must be connected")
    if g.n_vertices > MAX_GENERIC_VERTICES:
        raise ResourceLimitError(
            f"box scan limited to {MAX_GENERIC_VERTICES} vertices; "
            "use count_lattice_points_bipartite for complete bipartite graphs"
        )
    if n == 0 or g.n_edges == 0:
        return 1
    return kernels.box_count(facet_matrix(enumerate_facets(g)), n, use_numba=use_numba)


@lru_cache(maxsize=None)
def _l1_sum_table(k: int, n: int) -> tuple[int, ...]:
    """Entry s+n: number of v in Z^k with sum |v_i| <= n and sum v_i = s."""
    # state[l][s + n]: vectors using l1-mass exactly l with coordinate sum s
    width = 2 * n + 1
    state = [[0] * width for _ in range(n + 1)]
    state[0][n] = 1
    for _ in range(k):
        nxt = [[0] * width for _ in range(n + 1)]
        for l in range(n + 1):
            row = state[l]
            for s_idx, cnt in enumerate(row):
                if not cnt:
                    continue
                for c in range(-(n - l), n - l + 1):
                    nxt[l + abs(c)][s_idx + c] += cnt
        state = nxt
    return tuple(sum(state[l][s] for l in range(n + 1)) for s in range(width))


def count_lattice_points_bipartite(a: int, b: int, n: int) -> int:
    """Lattice points of n*P_{K_{a,b}} (part sizes a and b, not shifted).

    The facets give n*P = {x : sum_i |x_{v_i}| <= n, sum_j |x_{w_j}| <= n,
    sum x = 0}; the two sides are counted separately and matched on their sum.
    """
    if a < 1 or b < 1:
        raise DomainError("part sizes must be positive")
    if n < 0:
        raise DomainError("dilation must be non-negative")
    ta = _l1_sum_table(a, n)
    tb = _l1_sum_table(b, n)
    width = 2 * n + 1
    return sum(ta[s] * tb[width - 1 - s] for s in range(width))


def polytope_dimension(g: Graph) -> int:
    """Rank of the vertex set of P_G, computed exactly (equals |V| - 1 when connected)."""
    rows = []
    for u, v in g.edges:
        vec = [Fraction(0)] * g.n_vertices
        vec[u], vec[v] = Fraction(1), Fraction(-1)
        rows.append(vec)
    return exact_rank(rows)


def exact_rank(rows) -> int:
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows:
        return 0
    rank, ncols = 0, len(rows[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] / p
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _bipartite_parts(g: Graph) -> tuple[int, int] | None:
    if g.layout is None:
        return None
    a, b = len(g.layout.top), len(g.layout.bottom)
    return (a, b) if g.n_edges == a * b else None


def ehrhart_counts(g: Graph, n_max: int, method: str = "auto", use_numba: bool | None = None) -> list[int]:
    parts = _bipartite_parts(g)
    if method == "auto":
        method = "bipartite" if parts else "generic"
    if method == "bipartite":
        if parts is None:
            raise DomainError("bipartite counter needs a complete bipartite graph")
        return [count_lattice_points_bipartite(*parts, n) for n in range(n_max + 1)]
    if method == "generic":
        return [count_lattice_points(g, n, use_numba=use_numba) for n in range(n_max + 1)]
    raise DomainError(f"unknown counting method {method!r}")


def hstar_via_interpolation(g: Graph, method: str = "auto", use_numba: bool | None = None) -> ExactPolynomial:
    """h* from the counts E(0..d), d = |V| - 1, with Stanley nonnegativity asserted."""
    if not is_connected(g):
        raise DomainError("graph must be connected")
    d = g.n_vertices - 1
    if polytope_dimension(g) != d:
        raise InvariantViolation("vertex set of P_G does not span the sum-zero hyperplane")
    counts = ehrhart_counts(g, d, method=method, use_numba=use_numba)
    h = hstar_from_counts(counts, d)
    if any(c < 0 for c in h.coeffs):
        raise InvariantViolation(f"negative h* coefficient in {h}")
    return h


def check_overdetermined(g: Graph, h: ExactPolynomial, extra: int = 2, method: str = "auto") -> bool:
    """Counts at n = d+1 .. d+extra predicted by h* match direct counts."""
    d = g.n_vertices - 1
    counts = ehrhart_counts(g, d + extra, method=method)
    return all(ehrhart_from_hstar(h, d, n) == counts[n] for n in range(d + 1, d + extra + 1))


def hstar_bipartite_interpolated(a: int, b: int, method: str = "bipartite") -> ExactPolynomial:
    """h* of P_{K_{a+1,b+1}} (shifted indices) by counting."""
    return hstar_via_interpolation(make_complete_bipartite(a + 1, b + 1), method=method)
