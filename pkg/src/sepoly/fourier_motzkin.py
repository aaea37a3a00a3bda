"""Exact Fourier-Motzkin feasibility for small systems of linear inequalities.

Used as the V-description oracle for P_G: a point x lies in n*P_G iff no
labelling f with <f, vertex> <= 1 on every vertex has <f, x> > n. That system
has one variable per graph vertex (minus one for the additive constant), so
elimination stays small.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DomainError, ResourceLimitError
from .graph import Graph, is_connected

MAX_VARIABLES = 6
MAX_CONSTRAINTS = 200_000


@dataclass(frozen=True)
class Inequality:
    """sum coeffs[i] * y_i  <=  rhs   (or < rhs when strict)."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    strict: bool = False


def _normalize(coeffs: Sequence[Fraction], rhs: Fraction) -> tuple[tuple[Fraction, ...], Fraction]:
    scale = max((abs(c) for c in coeffs), default=Fraction(0))
    if scale == 0:
        return tuple(coeffs), rhs
    return tuple(c / scale for c in coeffs), rhs / scale


def _add(pool: dict, coeffs, rhs, strict) -> None:
    key = coeffs
    old = pool.get(key)
    if old is None or rhs < old[0] or (rhs == old[0] and strict and not old[1]):
        pool[key] = (rhs, strict)


def feasible(system: Iterable[Inequality], n_vars: int) -> bool:
    """Whether the system has a real solution, decided by exact elimination.

    Redundancy control is limited to keeping the tightest right-hand side per
    normalized coefficient vector.
    """
    if n_vars > MAX_VARIABLES:
        raise ResourceLimitError(f"Fourier-Motzkin limited to {MAX_VARIABLES} variables")
    pool: dict = {}
    for ineq in system:
        if len(ineq.coeffs) != n_vars:
            raise DomainError("coefficient length does not match variable count")
        c, r = _normalize([Fraction(x) for x in ineq.coeffs], Fraction(ineq.rhs))
        _add(pool, c, r, ineq.strict)
    for k in range(n_vars):
        upper, lower, rest = [], [], {}
        for c, (r, s) in pool.items():
            if c[k] > 0:
                upper.append((c, r, s))
            elif c[k] < 0:
                lower.append((c, r, s))
            else:
                _add(rest, c, r, s)
        if len(upper) * len(lower) + len(rest) > MAX_CONSTRAINTS:
            raise ResourceLimitError("Fourier-Motzkin constraint blow-up")
        for cu, ru, su in upper:
            for cl, rl, sl in lower:
                wu, wl = -cl[k], cu[k]
                coeffs = [wu * x + wl * y for x, y in zip(cu, cl)]
                coeffs[k] = Fraction(0)
                c, r = _normalize(coeffs, wu * ru + wl * rl)
                _add(rest, c, r, su or sl)
        pool = rest
    # only constant constraints remain: 0 <= r (or 0 < r)
    return all((r > 0) if s else (r >= 0) for _, (r, s) in pool.items())


def in_dilate_vdesc(g: Graph, x: Sequence[int], n: int) -> bool:
    """x in n*P_G, decided from the vertex description alone.

    By polarity, x is outside n*P_G iff some f with |f(u) - f(v)| <= 1 on
    every edge (the polar of the vertex set) has <f, x> > n. f is fixed at
    vertex 0 to remove the additive constant.
    """
    if sum(x) != 0:
        raise DomainError("lattice point must have coordinate sum 0")
    nv = g.n_vertices
    if nv == 1:
        return True
    if sum(abs(c) for c in x) > 2 * n:
        # every vertex of P_G has l1-norm 2
        return False
    k = nv - 1

    def row(vec):
        return tuple(Fraction(vec[i]) for i in range(1, nv))

    system = []
    for u, v in g.edges:
        for p, q in ((u, v), (v, u)):
            vec = [0] * nv
            vec[p] += 1
            vec[q] -= 1
            system.append(Inequality(row(vec), Fraction(1)))
    system.append(Inequality(row([-c for c in x]), Fraction(-n), strict=True))
    return not feasible(system, k)


def count_lattice_points_vdesc(g: Graph, n: int) -> int:
    """Lattice points of n*P_G via the Fourier-Motzkin oracle (|V| <= 7)."""
    if not is_connected(g):
        raise DomainError("graph must be connected")
    if g.n_vertices - 1 > MAX_VARIABLES:
        raise ResourceLimitError("vertex-description oracle limited to 7 vertices")
    nv = g.n_vertices
    total = 0
    for head in _sum_zero_box(nv, n):
        if in_dilate_vdesc(g, head, n):
            total += 1
    return total


def _sum_zero_box(nv: int, n: int):
    """Integer vectors in [-n, n]^nv with coordinate sum zero and l1-norm <= 2n."""
    vec = [0] * nv

    def rec(i: int, partial: int, l1: int):
        if i == nv - 1:
            last = -partial
            if -n <= last <= n and l1 + abs(last) <= 2 * n:
                vec[i] = last
                yield tuple(vec)
            return
        for val in range(-n, n + 1):
            if l1 + abs(val) > 2 * n:
                continue
            vec[i] = val
            yield from rec(i + 1, partial + val, l1 + abs(val))

    yield from rec(0, 0, 0)
