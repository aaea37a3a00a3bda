"""Binomial Gröbner bases of the toric ideal of P_G under degrevlex.

Variables: ``z`` for the origin and, for the k-th edge (u, v) with u < v,
``x[ek]`` for the orientation u -> v and ``y[ek]`` for v -> u. The order is
z < x[e1] < y[e1] < x[e2] < ...; exponent vectors are stored in that order,
index 0 being z.

Nothing here runs Buchberger. Candidate bases are checked by fibres of the
toric map: a set of leading monomials is right up to degree D exactly when
every fibre of degree <= D has a single monomial divisible by none of them.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .complex import SimplicialComplex
from .errors import DomainError, ResourceLimitError
from .graph import Graph, is_connected

MAX_BINOMIALS = 10_000
MAX_CYCLES = 10_000
MAX_FIBRE_MONOMIALS = 2_000_000

Monomial = tuple  # exponent vector, index 0 is z


@dataclass(frozen=True, order=True)
class OrientedEdgeVariable:
    """One of the two variables of an edge, or the origin variable z (edge None)."""

    edge: int | None  # position in Graph.edges
    kind: str  # "x", "y" or "z"

    @property
    def index(self) -> int:
        if self.kind == "z":
            return 0
        return 1 + 2 * self.edge + (self.kind == "y")

    @classmethod
    def from_index(cls, k: int) -> "OrientedEdgeVariable":
        if k == 0:
            return cls(None, "z")
        e, r = divmod(k - 1, 2)
        return cls(e, "y" if r else "x")

    def orientation(self, g: Graph) -> tuple[int, int] | None:
        if self.kind == "z":
            return None
        u, v = g.edges[self.edge]
        return (u, v) if self.kind == "x" else (v, u)

    def __str__(self) -> str:
        return "z" if self.kind == "z" else f"{self.kind}[e{self.edge + 1}]"


def degrevlex_key(m: Sequence[int]) -> tuple:
    """Sort key: larger key means larger monomial.

    Degree first; on a tie the monomial with the larger exponent in the
    smallest variable where they differ is the smaller one.
    """
    return (sum(m), tuple(-a for a in m))


def degrevlex_cmp(m1: Sequence[int], m2: Sequence[int]) -> int:
    k1, k2 = degrevlex_key(m1), degrevlex_key(m2)
    return (k1 > k2) - (k1 < k2)


def divides(m1: Sequence[int], m2: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def render_monomial(m: Sequence[int], names: Sequence[str] | None = None) -> str:
    parts = []
    for k, a in enumerate(m):
        if not a:
            continue
        name = names[k] if names is not None else str(OrientedEdgeVariable.from_index(k))
        parts.append(name if a == 1 else f"{name}^{a}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True, order=True)
class Binomial:
    """lead - trail, with lead > trail in degrevlex."""

    lead: Monomial
    trail: Monomial

    def __post_init__(self):
        if len(self.lead) != len(self.trail):
            raise DomainError("monomials live in different rings")
        if degrevlex_cmp(self.lead, self.trail) <= 0:
            raise DomainError("lead must exceed trail in degrevlex")

    @classmethod
    def oriented(cls, m1: Monomial, m2: Monomial) -> "Binomial":
        """The binomial +-(m1 - m2), signed so that the leading term is positive."""
        return cls(m1, m2) if degrevlex_cmp(m1, m2) > 0 else cls(m2, m1)

    def __str__(self) -> str:
        return f"{render_monomial(self.lead)} - {render_monomial(self.trail)}"

    def to_json(self) -> dict:
        return {"lead": list(self.lead), "trail": list(self.trail), "text": str(self)}


# ---------------------------------------------------------------------------
# cycles and the quadratic basis for an arbitrary graph


def simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Each simple cycle once, as a vertex sequence.

    The sequence starts at its smallest vertex and its second vertex is
    smaller than its last, which fixes rotation and reflection.
    """
    adj = g.adjacency()
    out: list[tuple[int, ...]] = []
    for s in range(g.n_vertices):
        path = [s]
        on_path = {s}

        def dfs(v: int) -> None:
            for w in adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                    if len(out) > MAX_CYCLES:
                        raise ResourceLimitError(f"more than {MAX_CYCLES} cycles")
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    dfs(w)
                    path.pop()
                    on_path.discard(w)

        dfs(s)
    return sorted(out, key=lambda c: (len(c), c))


def _edge_index(g: Graph) -> dict[tuple[int, int], int]:
    return {e: k for k, e in enumerate(g.edges)}


def _oriented_var(eidx: dict, p: int, q: int) -> int:
    """Index of the variable of the orientation p -> q."""
    if p < q:
        return 1 + 2 * eidx[(p, q)]
    return 2 + 2 * eidx[(q, p)]


def _cycle_binomial_count(length: int) -> int:
    if length % 2 == 0:
        k = length // 2
        return comb(length - 1, k)
    k = (length - 1) // 2
    return comb(length, k + 1)


def generate_gb(g: Graph) -> list[Binomial]:
    """The three binomial families for every cycle and every edge, deduplicated and sorted.

    Each cycle is used in both traversal directions (either may be the
    "fixed orientation"); duplicates are dropped.
    """
    if not is_connected(g):
        raise DomainError("graph must be connected")
    nvars = 1 + 2 * g.n_edges
    cycles = simple_cycles(g)
    expected = g.n_edges + sum(2 * _cycle_binomial_count(len(c)) for c in cycles)
    if expected > MAX_BINOMIALS:
        raise ResourceLimitError(f"about {expected} binomials exceed the guard of {MAX_BINOMIALS}")
    eidx = _edge_index(g)
    found: set[Binomial] = set()

    def mono(indices: Iterable[int], z: int = 0) -> Monomial:
        m = [0] * nvars
        m[0] = z
        for i in indices:
            m[i] += 1
        return tuple(m)

    for cyc in cycles:
        length = len(cyc)
        for seq in (cyc, cyc[::-1]):
            steps = [(seq[i], seq[(i + 1) % length]) for i in range(length)]
            edge_ids = [eidx[(min(p, q), max(p, q))] for p, q in steps]
            p_var = [_oriented_var(eidx, p, q) for p, q in steps]
            q_var = [_oriented_var(eidx, q, p) for p, q in steps]
            positions = range(length)
            if length % 2 == 0:
                k = length // 2
                if k < 2:
                    continue
                smallest = min(positions, key=lambda i: edge_ids[i])
                pool = [i for i in positions if i != smallest]
                for sub in combinations(pool, k):
                    rest = [i for i in positions if i not in sub]
                    found.add(Binomial.oriented(mono(p_var[i] for i in sub), mono(q_var[i] for i in rest)))
            else:
                k = (length - 1) // 2
                for sub in combinations(positions, k + 1):
                    rest = [i for i in positions if i not in sub]
                    found.add(
                        Binomial.oriented(mono(p_var[i] for i in sub), mono((q_var[i] for i in rest), z=1))
                    )
    for k in range(g.n_edges):
        found.add(Binomial.oriented(mono((1 + 2 * k, 2 + 2 * k)), mono((), z=2)))
    return sorted(found, key=lambda b: (degrevlex_key(b.lead), degrevlex_key(b.trail)))


# ---------------------------------------------------------------------------
# fibre check


@dataclass
class FibreReport:
    ok: bool
    degree_cap: int
    fibres_checked: int
    witness: tuple[Monomial, Monomial] | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "degree_cap": self.degree_cap,
            "fibres_checked": self.fibres_checked,
            "witness": None if self.witness is None else [list(m) for m in self.witness],
            "message": self.message,
        }


def variable_images(g: Graph) -> list[tuple[int, ...]]:
    """Lattice point of each variable: the origin for z, e_p - e_q for orientation p -> q."""
    out = [tuple([0] * g.n_vertices)]
    for u, v in g.edges:
        for p, q in ((u, v), (v, u)):
            vec = [0] * g.n_vertices
            vec[p], vec[q] = 1, -1
            out.append(tuple(vec))
    return out


def fibre_check(
    images: Sequence[Sequence[int]],
    leads: Sequence[Monomial],
    degree_cap: int,
    names: Sequence[str] | None = None,
) -> FibreReport:
    """Every fibre of degree <= degree_cap has exactly one monomial not divisible by a lead.

    A second such monomial m2 next to m1 gives the witness binomial m1 - m2,
    a member of the toric ideal with no term divisible by any lead.
    """
    nvars = len(images)
    dim = len(images[0]) if images else 0
    total = sum(comb(nvars + d - 1, d) for d in range(1, degree_cap + 1))
    if total > MAX_FIBRE_MONOMIALS:
        raise ResourceLimitError(f"{total} monomials up to degree {degree_cap} exceed the guard")
    lead_supports = [tuple((i, a) for i, a in enumerate(m) if a) for m in leads]
    checked = 0
    for d in range(1, degree_cap + 1):
        fibres: dict[tuple, list[Monomial]] = defaultdict(list)
        for combo in combinations_with_replacement(range(nvars), d):
            m = [0] * nvars
            img = [0] * dim
            for i in combo:
                m[i] += 1
                for c, x in enumerate(images[i]):
                    img[c] += x
            mt = tuple(m)
            if any(all(mt[i] >= a for i, a in sup) for sup in lead_supports):
                # record presence for the fibre count only
                fibres.setdefault(tuple(img), [])
                continue
            fibres[tuple(img)].append(mt)
        for key in sorted(fibres):
            standard = fibres[key]
            checked += 1
            if len(standard) != 1:
                if not standard:
                    return FibreReport(False, degree_cap, checked, None, f"fibre {key} in degree {d} has no standard monomial")
                standard.sort(key=degrevlex_key)
                m1, m2 = standard[-1], standard[0]
                msg = f"{render_monomial(m1, names)} - {render_monomial(m2, names)} has no divisible term"
                return FibreReport(False, degree_cap, checked, (m1, m2), msg)
    return FibreReport(True, degree_cap, checked)


def verify_gb_divisibility(g: Graph, basis: Sequence[Binomial], degree_cap: int) -> FibreReport:
    """Every binomial of the toric ideal up to degree_cap has a term divisible by a lead of basis."""
    if degree_cap < 1:
        raise DomainError("degree cap must be positive")
    return fibre_check(variable_images(g), [b.lead for b in basis], degree_cap)


def drop_binomials(basis: Sequence[Binomial], predicate) -> list[Binomial]:
    return [b for b in basis if not predicate(b)]


def is_type_three(b: Binomial) -> bool:
    return b.trail[0] == 2 and sum(b.trail) == 2


# ---------------------------------------------------------------------------
# complete bipartite graphs: initial terms of the reduced basis


def bipartite_variables(a: int, b: int) -> list[tuple]:
    """Variable labels in increasing order: z, then e_ij row by row, then f_ij row by row."""
    es = [("e", i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
    fs = [("f", i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
    return [("z",)] + es + fs


def variable_name(label: tuple) -> str:
    """e12, f31, ...; indices get brackets once one of them has two digits."""
    if label[0] == "z":
        return "z"
    kind, i, j = label
    return f"{kind}{i}{j}" if max(i, j) < 10 else f"{kind}[{i},{j}]"


def bipartite_initial_terms(a: int, b: int) -> list[tuple[tuple, tuple]]:
    """Quadratic initial terms for K_{a,b} (1-based v_i, w_j; e_ij = v_i -> w_j, f_ij = w_j -> v_i).

    Families:
      e_ij f_ij;
      e_ij e_i'j' and f_ij f_i'j' for i < i', j > j' (crossing edges of one direction);
      a vertex other than v_1, w_1 with one incoming and one outgoing edge:
      e_ij f_ij' (i != 1, j != j') at v_i and e_ij f_i'j (j != 1, i != i') at w_j.
    The third family is printed with transposed indices in its source; this
    reading is the one matching the forbidden subgraphs drawn alongside it,
    and it is confirmed by the tree and fibre checks.
    """
    if a < 1 or b < 1:
        raise DomainError("part sizes must be positive")
    out: set[tuple[tuple, tuple]] = set()

    def add(p, q):
        out.add((p, q) if p < q else (q, p))

    cells = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
    for i, j in cells:
        add(("e", i, j), ("f", i, j))
    for (i, j), (i2, j2) in combinations(cells, 2):
        if i < i2 and j > j2:
            add(("e", i, j), ("e", i2, j2))
            add(("f", i, j), ("f", i2, j2))
    for i, j in cells:
        for j2 in range(1, b + 1):
            if i != 1 and j2 != j:
                add(("e", i, j), ("f", i, j2))
        for i2 in range(1, a + 1):
            if j != 1 and i2 != i:
                add(("e", i, j), ("f", i2, j))
    return sorted(out)


def bipartite_variable_images(a: int, b: int) -> list[tuple[int, ...]]:
    """e_ij -> e_{v_i} - e_{w_j}, f_ij -> its negative, z -> 0, vertices v_1..v_a, w_1..w_b."""
    n = a + b
    out = []
    for lab in bipartite_variables(a, b):
        vec = [0] * n
        if lab[0] != "z":
            _, i, j = lab
            s = 1 if lab[0] == "e" else -1
            vec[i - 1], vec[a + j - 1] = s, -s
        out.append(tuple(vec))
    return out


def verify_bipartite_initial_terms(a: int, b: int, degree_cap: int = 3) -> FibreReport:
    """The quadratic terms generate the initial ideal in every degree up to degree_cap."""
    labels = bipartite_variables(a, b)
    pos = {lab: k for k, lab in enumerate(labels)}
    leads = []
    for p, q in bipartite_initial_terms(a, b):
        m = [0] * len(labels)
        m[pos[p]] += 1
        m[pos[q]] += 1
        leads.append(tuple(m))
    names = [variable_name(lab) for lab in labels]
    return fibre_check(bipartite_variable_images(a, b), leads, degree_cap, names)


def triangulation_from_nonfaces(nonfaces: Sequence[tuple[int, int]], vertex_count: int) -> SimplicialComplex:
    """Flag complex on range(vertex_count) whose minimal non-faces are the given pairs."""
    return SimplicialComplex(tuple(range(vertex_count)), tuple(nonfaces))


def bipartite_triangulation(a: int, b: int) -> SimplicialComplex:
    """Boundary triangulation of P_{K_{a,b}} from the initial terms; vertices labelled e_ij / f_ij."""
    labels = bipartite_variables(a, b)[1:]
    pos = {lab: k for k, lab in enumerate(labels)}
    pairs = [(pos[p], pos[q]) for p, q in bipartite_initial_terms(a, b)]
    c = triangulation_from_nonfaces(pairs, len(labels))
    return SimplicialComplex(tuple(labels), c.minimal_nonfaces)


def face_to_arrows(c: SimplicialComplex, face: Sequence[int], a: int) -> frozenset[tuple[int, int]]:
    """Directed edges of K_{a,b} (0-based, v_i = i - 1, w_j = a + j - 1) named by a face."""
    arrows = set()
    for k in face:
        kind, i, j = c.vertices[k]
        v, w = i - 1, a + j - 1
        arrows.add((v, w) if kind == "e" else (w, v))
    return frozenset(arrows)
