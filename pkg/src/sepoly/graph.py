"""Simple undirected graphs, family constructors and spanning-tree enumeration.

Vertices are dense 0-based indices; labels are for display only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .errors import DomainError

Edge = tuple[int, int]


@dataclass(frozen=True)
class BipartiteLayout:
    """Two-line drawing order: ``top`` is v_0..v_a left to right, ``bottom`` is w_0..w_b."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    n_vertices: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = None
    layout: BipartiteLayout | None = field(default=None, compare=False)
    parts: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n_vertices < 0:
            raise DomainError("negative vertex count")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise DomainError(f"edge ({u}, {v}) out of range")
            e = (u, v) if u < v else (v, u)
            if e in normalized:
                raise DomainError(f"multi-edge {e}")
            normalized.add(e)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        if self.labels is not None and len(self.labels) != self.n_vertices:
            raise DomainError("label count does not match vertex count")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nb in adj:
            nb.sort()
        return adj

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def bfs_order(self, root: int = 0) -> list[int]:
        adj = self.adjacency()
        seen = [False] * self.n_vertices
        seen[root] = True
        order = [root]
        for u in order:
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    order.append(w)
        return order

    # -- serialization -------------------------------------------------
    def to_json(self) -> dict:
        return {"n": self.n_vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple((int(u), int(v)) for u, v in data["edges"]))

    def to_edgelist(self) -> str:
        lines = [f"{self.n_vertices} {self.n_edges}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist(cls, text: str) -> "Graph":
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows or len(rows[0]) != 2:
            raise DomainError("edge list must start with a line 'n m'")
        n, m = int(rows[0][0]), int(rows[0][1])
        body = rows[1:]
        if len(body) != m:
            raise DomainError(f"header announces {m} edges, found {len(body)}")
        return cls(n, tuple((int(u), int(v)) for u, v in body))

    @classmethod
    def parse(cls, text: str) -> "Graph":
        """Accept either the JSON or the plain edge-list format."""
        stripped = text.lstrip()
        if stripped.startswith("{"):
            return cls.from_json(stripped)
        return cls.from_edgelist(text)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise DomainError("complete graph needs at least one vertex")
    return Graph(n, tuple(combinations(range(n), 2)), parts=(1,) * n)


def make_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with top vertices 0..a-1 and bottom vertices a..a+b-1."""
    if a < 1 or b < 1:
        raise DomainError(f"part sizes must be positive, got ({a}, {b})")
    top = tuple(range(a))
    bottom = tuple(range(a, a + b))
    labels = tuple(f"v{i}" for i in range(a)) + tuple(f"w{j}" for j in range(b))
    edges = tuple((u, w) for u in top for w in bottom)
    return Graph(a + b, edges, labels=labels, layout=BipartiteLayout(top, bottom), parts=(a, b))


def make_complete_multipartite(parts: Sequence[int]) -> Graph:
    parts = tuple(int(p) for p in parts)
    if not parts:
        raise DomainError("empty part list")
    if any(p < 1 for p in parts):
        raise DomainError(f"part sizes must be positive, got {parts}")
    if len(parts) == 2:
        return make_complete_bipartite(*parts)
    owner = [k for k, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    edges = tuple((u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v])
    return Graph(n, edges, parts=parts)


def part_blocks(parts: Sequence[int]) -> list[list[int]]:
    """Vertex index blocks of a complete multipartite graph, in constructor order."""
    blocks, start = [], 0
    for p in parts:
        blocks.append(list(range(start, start + p)))
        start += p
    return blocks


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


def connected_components(n: int, edges: Sequence[Edge]) -> int:
    dsu = _DSU(n)
    comps = n
    for u, v in edges:
        if dsu.union(u, v):
            comps -= 1
    return comps


def is_connected(g: Graph) -> bool:
    if g.n_vertices == 0:
        return True
    return connected_components(g.n_vertices, g.edges) == 1


def is_spanning_tree(n: int, edges: Sequence[Edge]) -> bool:
    """Acyclic and connected on all ``n`` vertices."""
    if len(edges) != n - 1:
        return False
    dsu = _DSU(n)
    return all(dsu.union(u, v) for u, v in edges)


def spanning_trees(g: Graph) -> Iterator[tuple[Edge, ...]]:
    """Yield every spanning tree once, as a sorted edge tuple, in lexicographic order.

    Include/exclude backtracking over the sorted edge list. An edge is included
    when it joins two components; it is excluded only if the graph without it
    can still be spanned.
    """
    if not is_connected(g):
        raise DomainError("spanning trees requested for a disconnected graph")
    n = g.n_vertices
    edges = g.edges
    m = len(edges)
    need = n - 1
    chosen: list[Edge] = []

    def completable(k: int) -> bool:
        return connected_components(n, chosen + list(edges[k:])) == 1

    def rec(k: int) -> Iterator[tuple[Edge, ...]]:
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if k == m or m - k < need - len(chosen):
            return
        u, v = edges[k]
        dsu = _DSU(n)
        for x, y in chosen:
            dsu.union(x, y)
        if dsu.find(u) != dsu.find(v):
            chosen.append(edges[k])
            yield from rec(k + 1)
            chosen.pop()
        if completable(k + 1):
            yield from rec(k + 1)

    yield from rec(0)
