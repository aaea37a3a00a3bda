"""Directed spanning trees of K_{a+1,b+1} indexing the flag triangulation.

Vertex numbering: v_i = i for 0 <= i <= a (upper line), w_j = a + 1 + j for
0 <= j <= b (lower line). An edge w -> v points up, v -> w points down.
Each tree carries the h*-statistic "number of ingoing edges".
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Iterator, Sequence

from .closed_forms import binom, hstar_closed
from .errors import DomainError, InvariantViolation, ResourceLimitError
from .graph import _DSU, is_spanning_tree, make_complete_bipartite, spanning_trees
from .poly import ExactPolynomial

MAX_TREES = 10_000_000


@dataclass(frozen=True)
class DirectedSpanningTree:
    a: int
    b: int
    edges: frozenset  # of (tail, head)

    def is_top(self, v: int) -> bool:
        return v <= self.a

    @property
    def v0(self) -> int:
        return 0

    @property
    def w0(self) -> int:
        return self.a + 1

    @cached_property
    def up_edges(self) -> frozenset:
        return frozenset((p, q) for p, q in self.edges if not self.is_top(p))

    @cached_property
    def down_edges(self) -> frozenset:
        return frozenset((p, q) for p, q in self.edges if self.is_top(p))

    @cached_property
    def up_vertices(self) -> frozenset:
        """Vertices of T-up; {w_0} when there are no upward edges."""
        if not self.up_edges:
            return frozenset({self.w0})
        return frozenset(v for e in self.up_edges for v in e)

    @cached_property
    def down_vertices(self) -> frozenset:
        """Vertices of T-down; {v_0} when there are no downward edges."""
        if not self.down_edges:
            return frozenset({self.v0})
        return frozenset(v for e in self.down_edges for v in e)

    @property
    def a_up(self) -> frozenset:
        return frozenset(v for v in self.up_vertices if self.is_top(v))

    @property
    def b_up(self) -> frozenset:
        return frozenset(v for v in self.up_vertices if not self.is_top(v))

    @property
    def a_down(self) -> frozenset:
        return frozenset(v for v in self.down_vertices if self.is_top(v))

    @property
    def b_down(self) -> frozenset:
        return frozenset(v for v in self.down_vertices if not self.is_top(v))

    def name(self, v: int) -> str:
        return f"v{v}" if self.is_top(v) else f"w{v - self.a - 1}"

    def arrows(self) -> list[str]:
        return [f"{self.name(p)}->{self.name(q)}" for p, q in sorted(self.edges)]

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "edges": [list(e) for e in sorted(self.edges)], "arrows": self.arrows()}


def _crosses(e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """Two (top, bottom) segments cross in their interiors iff (i-k)(j-l) < 0."""
    (i, j), (k, l) = e1, e2
    return (i - k) * (j - l) < 0


def _undirected(edges, a: int) -> list[tuple[int, int]]:
    """(top, bottom) pairs with the bottom vertex given by its position j."""
    out = []
    for p, q in edges:
        top, bot = (p, q) if p <= a else (q, p)
        out.append((top, bot - a - 1))
    return out


def is_planar(edges, a: int) -> bool:
    segs = _undirected(edges, a)
    return not any(_crosses(s, t) for s, t in combinations(segs, 2))


def satisfies_tree_description(t: DirectedSpanningTree) -> bool:
    """The three membership conditions, checked literally."""
    n = t.a + t.b + 2
    if not is_spanning_tree(n, [tuple(sorted(e)) for e in t.edges]):
        return False
    v0, w0 = t.v0, t.w0
    if (v0, w0) not in t.edges and (w0, v0) not in t.edges:
        return False
    if not (is_planar(t.up_edges, t.a) and is_planar(t.down_edges, t.a)):
        return False
    return t.up_vertices & t.down_vertices in ({v0}, {w0})


# ---------------------------------------------------------------------------
# planar spanning trees on two rows


def planar_spanning_trees(top: Sequence[int], bottom: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """Non-crossing spanning trees on the given sorted top and bottom positions.

    They are exactly the staircases from (top[0], bottom[0]) to (top[-1],
    bottom[-1]) advancing one row index per step.
    """
    p, q = len(top), len(bottom)
    if p == 0 or q == 0:
        if p + q == 1:
            yield []
        return

    def rec(i: int, j: int, acc: list) -> Iterator[list[tuple[int, int]]]:
        acc.append((top[i], bottom[j]))
        if i == p - 1 and j == q - 1:
            yield list(acc)
        else:
            if i < p - 1:
                yield from rec(i + 1, j, acc)
            if j < q - 1:
                yield from rec(i, j + 1, acc)
        acc.pop()

    yield from rec(0, 0, [])


def planar_spanning_tree_count(a: int, b: int) -> int:
    """Planar spanning trees of K_{a+1,b+1} by pruned edge-by-edge search.

    Independent of the staircase description: edges are decided in a fixed
    order, rejecting any that cross a chosen edge or close a cycle.
    """
    if a < 0 or b < 0:
        raise DomainError("indices must be non-negative")
    segs = [(i, j) for i in range(a + 1) for j in range(b + 1)]
    n = a + b + 2
    need = n - 1
    total = 0
    chosen: list[tuple[int, int]] = []

    def connected_after(extra) -> bool:
        dsu = _DSU(n)
        for i, j in chosen + [extra]:
            if not dsu.union(i, a + 1 + j):
                return False
        return True

    def rec(k: int) -> None:
        nonlocal total
        if len(chosen) == need:
            total += 1
            return
        if len(segs) - k < need - len(chosen):
            return
        s = segs[k]
        if not any(_crosses(s, c) for c in chosen) and connected_after(s):
            chosen.append(s)
            rec(k + 1)
            chosen.pop()
        rec(k + 1)

    rec(0)
    return total


def planar_spanning_tree_count_bruteforce(a: int, b: int) -> int:
    """Filter every spanning tree of K_{a+1,b+1} by the crossing test (tiny cases only)."""
    g = make_complete_bipartite(a + 1, b + 1)
    return sum(1 for tree in spanning_trees(g) if is_planar(tree, a))


# ---------------------------------------------------------------------------
# the set of trees


def _tree_count_bound(a: int, b: int) -> int:
    return hstar_closed(a, b)(1)


def enumerate_T(a: int, b: int) -> list[DirectedSpanningTree]:
    """Glue a planar upward tree and a planar downward tree at v_0 or w_0.

    The centre c and a split of the remaining vertices into an upper side and
    a lower side are chosen; each side gets every planar spanning tree with
    the centre added, the upper one oriented bottom-to-top. Candidates are
    then held to the three conditions literally, which settles the
    degenerate cases where one side has no edges.
    """
    if a < 0 or b < 0:
        raise DomainError("indices must be non-negative")
    if _tree_count_bound(a, b) > MAX_TREES:
        raise ResourceLimitError(f"more than {MAX_TREES} trees")
    v0, w0 = 0, a + 1
    tops = list(range(a + 1))
    bots = list(range(a + 1, a + b + 2))
    found: set[frozenset] = set()
    for centre in (v0, w0):
        others = [v for v in tops + bots if v != centre]
        for side in product((0, 1), repeat=len(others)):
            up = sorted([centre] + [v for v, s in zip(others, side) if s])
            down = sorted([centre] + [v for v, s in zip(others, side) if not s])
            up_trees = list(_side_trees(up, a))
            down_trees = list(_side_trees(down, a))
            for tu in up_trees:
                arcs_up = [(w, v) for v, w in tu]
                for td in down_trees:
                    edges = frozenset(arcs_up + [(v, w) for v, w in td])
                    if edges in found:
                        continue
                    if satisfies_tree_description(DirectedSpanningTree(a, b, edges)):
                        found.add(edges)
    return [DirectedSpanningTree(a, b, e) for e in sorted(found, key=sorted)]


def _side_trees(vertices: list[int], a: int) -> Iterator[list[tuple[int, int]]]:
    """Planar spanning trees on a vertex set as (top, bottom) vertex pairs."""
    top = [v for v in vertices if v <= a]
    bottom = [v for v in vertices if v > a]
    yield from planar_spanning_trees(top, bottom)


def _forbidden(edges: frozenset, a: int) -> bool:
    """Whether a directed edge set contains one of the forbidden pairs.

    Forbidden: both orientations of one edge; two crossing edges pointing the
    same way; a vertex other than v_0 and w_0 entered by one edge and left by
    another.
    """
    v0, w0 = 0, a + 1
    indeg: dict[int, int] = {}
    outdeg: dict[int, int] = {}
    for p, q in edges:
        if (q, p) in edges:
            return True
        outdeg[p] = outdeg.get(p, 0) + 1
        indeg[q] = indeg.get(q, 0) + 1
    for v in indeg:
        if v not in (v0, w0) and outdeg.get(v, 0):
            return True
    ups = [e for e in edges if e[0] > a]
    downs = [e for e in edges if e[0] <= a]
    return not (is_planar(ups, a) and is_planar(downs, a))


def enumerate_T_filtered(a: int, b: int) -> list[DirectedSpanningTree]:
    """Every orientation of every spanning tree, kept when no forbidden pair occurs."""
    n_edges = a + b + 1
    g = make_complete_bipartite(a + 1, b + 1)
    out = []
    for tree in spanning_trees(g):
        for signs in product((0, 1), repeat=n_edges):
            edges = frozenset((u, v) if s else (v, u) for (u, v), s in zip(tree, signs))
            if not _forbidden(edges, a):
                out.append(edges)
    return [DirectedSpanningTree(a, b, e) for e in sorted(out, key=sorted)]


# ---------------------------------------------------------------------------
# ingoing edges


def ingoing_count(t: DirectedSpanningTree) -> int:
    """Edges pointing into the part containing w_0 once they are removed."""
    n = t.a + t.b + 2
    count = 0
    for removed in t.edges:
        dsu = _DSU(n)
        for p, q in t.edges:
            if (p, q) != removed:
                dsu.union(p, q)
        p, q = removed
        if dsu.find(q) == dsu.find(t.w0):
            count += 1
    return count


def tree_case(t: DirectedSpanningTree) -> str:
    """Case label "i", "ii" or "iii" of the closed ingoing count."""
    meet = t.up_vertices & t.down_vertices
    if meet == {t.v0}:
        if t.w0 in t.up_vertices:
            return "i"
        if t.w0 in t.down_vertices:
            return "ii"
    elif meet == {t.w0}:
        return "iii"
    raise InvariantViolation(f"tree {t.arrows()} fits none of the three cases")


def ingoing_count_closed(t: DirectedSpanningTree) -> int:
    base = len(t.a_down) + len(t.b_up)
    return base - {"i": 2, "ii": 0, "iii": 1}[tree_case(t)]


def hstar_via_trees(a: int, b: int) -> ExactPolynomial:
    hist = Counter(ingoing_count(t) for t in enumerate_T(a, b))
    return ExactPolynomial([hist.get(k, 0) for k in range(max(hist) + 1)])


def trees_in_facet(trees: Sequence[DirectedSpanningTree], values: Sequence[int]) -> list[DirectedSpanningTree]:
    """Trees whose simplex lies in the facet of f: f(q) - f(p) = 1 on every arrow (p, q)."""
    return [t for t in trees if all(values[q] - values[p] == 1 for p, q in t.edges)]


# ---------------------------------------------------------------------------
# binning by case and side sizes


def tree_type_bins(a: int, b: int) -> dict[tuple[str, int, int], tuple[int, int]]:
    """(case, |A-down|, |B-up|) -> (number of trees, their common ingoing count).

    Degenerate trees are placed as in the summation: all edges downward counts
    as case ii with |A-down| = a + 1, |B-up| = 0; all edges upward counts as
    case iii with |A-down| = 0, |B-up| = b + 1.
    """
    bins: dict[tuple[str, int, int], list[int]] = {}
    for t in enumerate_T(a, b):
        if not t.up_edges:
            key = ("ii", a + 1, 0)
        elif not t.down_edges:
            key = ("iii", 0, b + 1)
        else:
            key = (tree_case(t), len(t.a_down), len(t.b_up))
        alpha = ingoing_count(t)
        entry = bins.setdefault(key, [0, alpha])
        if entry[1] != alpha:
            raise InvariantViolation(f"bin {key} mixes ingoing counts {entry[1]} and {alpha}")
        entry[0] += 1
    return {k: (v[0], v[1]) for k, v in sorted(bins.items())}


def formula_bins(a: int, b: int) -> dict[tuple[str, int, int], tuple[int, int]]:
    """The same bins read off the three double sums term by term."""
    out: dict[tuple[str, int, int], tuple[int, int]] = {}

    def put(key, count, exponent):
        if count:
            out[key] = (count, exponent)

    for i in range(a + 1):
        for j in range(b + 1):
            put(("i", a + 1 - i, j + 1),
                comb(a, i) * comb(b, j) * binom(i + j, j) * binom(a + b - i - j - 1, b - j - 1),
                j + a - i)
            put(("ii", a + 1 - i, j),
                comb(a, i) * comb(b, j) * binom(i + j - 1, j - 1, True) * binom(a + b - i - j, b - j, True),
                j + a - i + 1)
    for i in range(1, a + 2):
        for j in range(b + 1):
            put(("iii", a + 1 - i, j + 1),
                comb(a + 1, i) * comb(b, j) * binom(i + j - 1, i - 1, True) * binom(a + b - i - j, a - i, True),
                j + a - i + 1)
    return dict(sorted(out.items()))
