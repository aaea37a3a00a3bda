"""Flag simplicial complexes and the balanced complex whose f-polynomial is gamma_{a,b}."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .errors import DomainError, ResourceLimitError
from .poly import ExactPolynomial

MAX_FACES = 5_000_000


@dataclass(frozen=True)
class SimplicialComplex:
    """Flag complex given by its vertex labels and minimal non-faces (all pairs)."""

    vertices: tuple
    minimal_nonfaces: tuple[tuple[int, int], ...]
    color: tuple[int, ...] | None = None
    _compat: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        nv = len(self.vertices)
        pairs = set()
        for u, v in self.minimal_nonfaces:
            if u == v or not (0 <= u < nv and 0 <= v < nv):
                raise DomainError(f"bad non-face ({u}, {v})")
            pairs.add((min(u, v), max(u, v)))
        object.__setattr__(self, "minimal_nonfaces", tuple(sorted(pairs)))
        if self.color is not None and len(self.color) != nv:
            raise DomainError("one colour per vertex required")
        # bit k of _compat[u] set iff {u, k} is a face
        full = (1 << nv) - 1
        compat = [full & ~(1 << u) for u in range(nv)]
        for u, v in pairs:
            compat[u] &= ~(1 << v)
            compat[v] &= ~(1 << u)
        object.__setattr__(self, "_compat", tuple(compat))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def index(self, label) -> int:
        return self.vertices.index(label)

    def is_face(self, face: Sequence[int]) -> bool:
        face = list(face)
        return all(self._compat[u] >> v & 1 for i, u in enumerate(face) for v in face[i + 1 :])

    def faces(self) -> Iterator[tuple[int, ...]]:
        """All faces, the empty face included, by clique extension in index order."""
        compat = self._compat
        stack: list[tuple[tuple[int, ...], int]] = [((), (1 << self.n_vertices) - 1)]
        emitted = 0
        while stack:
            face, cand = stack.pop()
            emitted += 1
            if emitted > MAX_FACES:
                raise ResourceLimitError(f"more than {MAX_FACES} faces")
            yield face
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                stack.append((face + (v,), cand & compat[v]))

    def facets(self) -> list[tuple[int, ...]]:
        """Maximal faces."""
        out = []
        compat = self._compat
        full = (1 << self.n_vertices) - 1
        for face in self.faces():
            common = full
            for v in face:
                common &= compat[v]
            for v in face:
                common &= ~(1 << v)
            if common == 0:
                out.append(face)
        return sorted(out)

    def dimension(self) -> int:
        return max(len(f) for f in self.faces()) - 1


def f_polynomial(c: SimplicialComplex) -> ExactPolynomial:
    """sum_k (#faces with k vertices) t^k; the empty face contributes the constant 1."""
    counts = [0] * (c.n_vertices + 1)
    for face in c.faces():
        counts[len(face)] += 1
    return ExactPolynomial(counts)


def check_balanced(c: SimplicialComplex) -> bool:
    if c.color is None:
        return False
    return all(len({c.color[v] for v in f}) == len(f) for f in c.facets())


def check_flag(c: SimplicialComplex) -> bool:
    """Every minimal non-face is a genuine non-face of size two whose vertices are faces."""
    return all(not c.is_face(p) for p in c.minimal_nonfaces)


def build_nevo_complex(a: int, b: int) -> SimplicialComplex:
    """Vertices x_{i,j}, y_{i,j} (1 <= i <= a, 1 <= j <= b) after swapping to a <= b.

    Non-faces: {x_ij, x_i'j'} and {y_ij, y_i'j'} for i <= i', j >= j' (distinct
    vertices only), and every {x_ij, y_i'j'} sharing a row or a column index.
    Vertex x_ij and y_ij get colour i.
    """
    if a < 1 or b < 1:
        raise DomainError("a, b >= 1 required")
    if a > b:
        a, b = b, a
    cells = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
    labels = tuple(("x", i, j) for i, j in cells) + tuple(("y", i, j) for i, j in cells)
    idx = {lab: k for k, lab in enumerate(labels)}
    nonfaces = []
    for kind in ("x", "y"):
        for (i, j), (i2, j2) in product(cells, cells):
            if (i, j) != (i2, j2) and i <= i2 and j >= j2:
                nonfaces.append((idx[(kind, i, j)], idx[(kind, i2, j2)]))
    for (i, j), (i2, j2) in product(cells, cells):
        if i == i2 or j == j2:
            nonfaces.append((idx[("x", i, j)], idx[("y", i2, j2)]))
    colors = tuple(lab[1] for lab in labels)
    return SimplicialComplex(labels, tuple(nonfaces), colors)


def good_partial_colorings(a: int, b: int) -> Iterator[tuple[frozenset, frozenset, frozenset, frozenset]]:
    """(green_A, red_A, green_B, red_B) with |green_A| = |red_B| and |green_B| = |red_A|."""
    for ca in product((0, 1, 2), repeat=a):
        ga = frozenset(i + 1 for i, c in enumerate(ca) if c == 1)
        ra = frozenset(i + 1 for i, c in enumerate(ca) if c == 2)
        for cb in product((0, 1, 2), repeat=b):
            gb = frozenset(j + 1 for j, c in enumerate(cb) if c == 1)
            rb = frozenset(j + 1 for j, c in enumerate(cb) if c == 2)
            if len(ga) == len(rb) and len(gb) == len(ra):
                yield ga, ra, gb, rb


def face_to_coloring(c: SimplicialComplex, face) -> tuple[frozenset, frozenset, frozenset, frozenset]:
    labels = [c.vertices[v] for v in face]
    xa = frozenset(i for k, i, _ in labels if k == "x")
    xb = frozenset(j for k, _, j in labels if k == "x")
    ya = frozenset(i for k, i, _ in labels if k == "y")
    yb = frozenset(j for k, _, j in labels if k == "y")
    # green in A: X_A; red in A: Y_A; red in B: X_B; green in B: Y_B
    return xa, ya, yb, xb


def coloring_to_face(c: SimplicialComplex, coloring) -> tuple[int, ...]:
    ga, ra, gb, rb = coloring
    xs = [("x", i, j) for i, j in zip(sorted(ga), sorted(rb))]
    ys = [("y", i, j) for i, j in zip(sorted(ra), sorted(gb))]
    return tuple(sorted(c.index(lab) for lab in xs + ys))


def coloring_bijection_check(a: int, b: int) -> bool:
    """Faces of the complex correspond one-to-one with good partial red/green colorings."""
    if a > b:
        a, b = b, a
    c = build_nevo_complex(a, b)
    faces = {tuple(sorted(f)) for f in c.faces()}
    colorings = set(good_partial_colorings(a, b))
    if len(faces) != len(colorings):
        return False
    for f in faces:
        col = face_to_coloring(c, f)
        if col not in colorings or coloring_to_face(c, col) != f:
            return False
        if len(f) != len(col[0]) + len(col[2]):
            return False
    for col in colorings:
        f = coloring_to_face(c, col)
        if f not in faces or face_to_coloring(c, f) != col:
            return False
    return True
