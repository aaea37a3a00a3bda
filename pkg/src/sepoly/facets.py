"""Facets of the symmetric edge polytope P_G.

A facet is described by an integer vertex labelling f, taken up to a common
additive constant, with the facet hyperplane {x : sum_v f(v) x_v = 1}. A
labelling is facet-defining exactly when adjacent values differ by at most
one and the edges where they differ by exactly one span the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from .errors import DomainError
from .graph import Graph, connected_components, is_connected, make_complete_bipartite, part_blocks


@dataclass(frozen=True, order=True)
class FacetFunction:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if vals:
            lo = min(vals)
            vals = tuple(v - lo for v in vals)
        object.__setattr__(self, "values", vals)

    def __call__(self, x: Sequence[int]) -> int:
        return sum(f * xi for f, xi in zip(self.values, x))

    def negated(self) -> "FacetFunction":
        return FacetFunction(tuple(-v for v in self.values))

    def tight_edges(self, g: Graph) -> list[tuple[int, int]]:
        """E_f: edges whose endpoint values differ by exactly one."""
        f = self.values
        return [(u, v) for u, v in g.edges if abs(f[u] - f[v]) == 1]

    def tight_vertices(self, g: Graph) -> list[tuple[int, ...]]:
        """Vertices e_u - e_v of P_G on the facet, i.e. f(u) - f(v) = 1."""
        f = self.values
        out = []
        for u, v in g.edges:
            for p, q in ((u, v), (v, u)):
                if f[p] - f[q] == 1:
                    vec = [0] * g.n_vertices
                    vec[p], vec[q] = 1, -1
                    out.append(tuple(vec))
        return out


def is_facet_defining(g: Graph, values: Sequence[int]) -> bool:
    """Direct check of the two facet conditions for a labelling."""
    if any(abs(values[u] - values[v]) > 1 for u, v in g.edges):
        return False
    tight = [(u, v) for u, v in g.edges if abs(values[u] - values[v]) == 1]
    return connected_components(g.n_vertices, tight) == 1


def enumerate_facets(g: Graph) -> list[FacetFunction]:
    """All facet-defining labellings, normalized to minimum 0, sorted.

    Depth-first assignment in breadth-first vertex order from vertex 0 with
    f(0) = 0; each vertex takes a value within one of every assigned
    neighbour. Values therefore stay within the graph diameter.
    """
    if g.n_edges == 0:
        raise DomainError("facets need at least one edge")
    if not is_connected(g):
        raise DomainError("facets are enumerated for connected graphs only")
    n = g.n_vertices
    adj = g.adjacency()
    order = g.bfs_order(0)
    pos = {v: k for k, v in enumerate(order)}
    earlier = [[u for u in adj[v] if pos[u] < pos[v]] for v in order]
    values = [0] * n
    found: set[tuple[int, ...]] = set()

    def rec(k: int) -> None:
        if k == n:
            if is_facet_defining(g, values):
                found.add(FacetFunction(tuple(values)).values)
            return
        v = order[k]
        nbrs = earlier[k]
        lo = max(values[u] for u in nbrs) - 1
        hi = min(values[u] for u in nbrs) + 1
        for val in range(lo, hi + 1):
            values[v] = val
            rec(k + 1)

    values[order[0]] = 0
    rec(1)
    return [FacetFunction(v) for v in sorted(found)]


def facet_matrix(facets: Sequence[FacetFunction]) -> np.ndarray:
    return np.array([f.values for f in facets], dtype=np.int64)


def count_facets_bipartite(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise DomainError("part sizes must be positive")
    return 2**a + 2**b - 2


def count_facets_multipartite(parts: Sequence[int]) -> int:
    if len(parts) < 3:
        raise DomainError("the multipartite count applies to k >= 3 parts")
    if any(p < 1 for p in parts):
        raise DomainError("part sizes must be positive")
    return 2 ** sum(parts) - sum(2**p - 2 for p in parts) - 2


def classify_multipartite_facet(facet: FacetFunction, parts: Sequence[int]) -> str:
    """Positional type label for a facet of a complete multipartite graph.

    ``"i"``: one part carries both -1 and 1 and every other part is 0 (up to
    a constant). ``"ii-a"``: values {0, 1}, constant on each part.
    ``"ii-b"``: values {0, 1}, two parts each carry both values.
    ``"ii-c"``: values {0, 1}, exactly one part carries both values and the
    constant values on the other parts are not all equal. These are facets
    too (the spanning condition holds) although the usual two-type list
    omits them; the facet count formula already includes them.
    Anything else gets ``"other"``, which never happens for a facet.
    """
    blocks = part_blocks(parts)
    vals = facet.values
    spread = max(vals) - min(vals)
    per_part = [sorted({vals[v] for v in blk}) for blk in blocks]
    if spread == 2:
        mixed = [k for k, s in enumerate(per_part) if len(s) > 1]
        if len(mixed) == 1:
            k = mixed[0]
            if per_part[k] == [0, 2] and all(s == [1] for j, s in enumerate(per_part) if j != k):
                return "i"
        return "other"
    if spread == 1:
        mixed = sum(1 for s in per_part if len(s) == 2)
        if mixed == 0:
            return "ii-a"
        if mixed >= 2:
            return "ii-b"
        constants = {s[0] for s in per_part if len(s) == 1}
        if len(constants) == 2:
            return "ii-c"
    return "other"


def membership(x: Sequence[int], n: int, facets: Sequence[FacetFunction]) -> bool:
    """Whether x lies in the n-th dilate, i.e. <f, x> <= n for every facet."""
    if sum(x) != 0:
        raise DomainError("lattice point must have coordinate sum 0")
    if n < 0:
        raise DomainError("dilation must be non-negative")
    return all(f(x) <= n for f in facets)


# ---------------------------------------------------------------------------
# facet volumes for complete bipartite graphs


def facet_volume_bipartite(a: int, b1: int, b2: int, b: int | None = None) -> int:
    """Normalized volume of a facet of P_{K_{a+1,b+1}}.

    The facet has f(v_i) = 0, f(w_j) = 1 for j <= b1 and f(w_j) = -1 for
    b1 < j <= b, so b1 + 1 bottom vertices sit at +1 and b2 = b - b1 at -1.
    With b2 = 0 the facet is a product of simplices of volume C(a+b, a).
    """
    if a < 0 or b1 < 0 or b2 < 0:
        raise DomainError("indices must be non-negative")
    if b is not None and b1 + b2 != b:
        raise DomainError(f"b1 + b2 = {b1 + b2} does not match b = {b}")
    if b2 == 0:
        return comb(a + b1, a)
    return sum(comb(b1 + i, b1) * comb(b2 + a - i - 1, b2 - 1) * comb(a, i) for i in range(a + 1))


def facet_volume_from_function(facet: FacetFunction, a: int, b: int) -> int:
    """Volume of any facet of P_{K_{a+1,b+1}} (vertex order of make_complete_bipartite(a+1, b+1)).

    Reduces to :func:`facet_volume_bipartite` with the symmetries of the
    polytope: central symmetry (negate f) and the swap of the two sides.
    """
    top = facet.values[: a + 1]
    bottom = facet.values[a + 1 :]
    if len(set(top)) == 1:
        side, other_size, base = bottom, a, top[0]
    elif len(set(bottom)) == 1:
        side, other_size, base = top, b, bottom[0]
    else:
        raise DomainError(f"{facet.values} is not a facet of a complete bipartite graph")
    signs = [v - base for v in side]
    if any(s not in (-1, 1) for s in signs):
        raise DomainError(f"{facet.values} is not a facet of a complete bipartite graph")
    plus = sum(1 for s in signs if s == 1)
    minus = len(signs) - plus
    if plus == 0:
        plus, minus = minus, plus
    return facet_volume_bipartite(other_size, plus - 1, minus)


def bipartite_facets(a: int, b: int) -> list[FacetFunction]:
    """Facets of P_{K_{a+1,b+1}} straight from the enumeration (convenience wrapper)."""
    return enumerate_facets(make_complete_bipartite(a + 1, b + 1))
