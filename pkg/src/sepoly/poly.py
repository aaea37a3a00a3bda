"""Exact univariate polynomials and real-root certification.

``ExactPolynomial`` carries arbitrary-precision integer coefficients (lowest
degree first). ``RationalPolynomial`` is the same container over
``fractions.Fraction`` and exists for division, gcd and Sturm chains.

Real-rootedness and interlacing are decided symbolically: square-free
decomposition, Sturm sequences and bisection on rational endpoints. Nothing in
this module touches floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DomainError, InconsistentCountsError


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class _DensePoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([self._coerce(c) for c in coeffs])

    @classmethod
    def _coerce(cls, c):
        return c

    # -- basic structure ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return render(self.coeffs)

    # -- arithmetic --------------------------------------------------------
    def _wrap(self, coeffs):
        return type(self)(coeffs)

    def _lift(self, other):
        if isinstance(other, _DensePoly):
            if isinstance(other, RationalPolynomial) and not isinstance(self, RationalPolynomial):
                return RationalPolynomial(self.coeffs), other
            if isinstance(self, RationalPolynomial) and not isinstance(other, RationalPolynomial):
                return self, RationalPolynomial(other.coeffs)
            return self, other
        if isinstance(other, int):
            return self, self._wrap([other])
        if isinstance(other, Fraction):
            return RationalPolynomial(self.coeffs), RationalPolynomial([other])
        return None, None

    def __add__(self, other):
        a, b = self._lift(other)
        if a is None:
            return NotImplemented
        n = max(len(a.coeffs), len(b.coeffs))
        return a._wrap([a[i] + b[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return self._wrap([-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._lift(other)
        if a is None:
            return NotImplemented
        n = max(len(a.coeffs), len(b.coeffs))
        return a._wrap([a[i] - b[i] for i in range(n)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._lift(other)
        if a is None:
            return NotImplemented
        if a.is_zero() or b.is_zero():
            return a._wrap([])
        out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    out[i + j] += x * y
        return a._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative polynomial power")
        result, base = self._wrap([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int):
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return self._wrap([0] * k + list(self.coeffs))

    def derivative(self):
        return self._wrap([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Sign of p(x) computed with integers only when p has integer coefficients."""
        v = self(Fraction(x))
        return (v > 0) - (v < 0)


class ExactPolynomial(_DensePoly):
    """Dense polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @classmethod
    def _coerce(cls, c):
        if isinstance(c, bool):
            return int(c)
        if isinstance(c, int):
            return c
        if isinstance(c, Rational) and c.denominator == 1:
            return int(c.numerator)
        if isinstance(c, str):
            return int(c)
        raise DomainError(f"non-integer coefficient {c!r}")

    def sign_at(self, x) -> int:
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        acc = 0
        qpow = 1
        # q^n * p(x) = sum c_i p^i q^(n-i), evaluated Horner-style from the top
        for c in reversed(self.coeffs):
            acc = acc * p + c * qpow
            qpow *= q
        return (acc > 0) - (acc < 0)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict | str) -> "ExactPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(c) for c in data["coeffs"])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g


class RationalPolynomial(_DensePoly):
    """Dense polynomial over the rationals; used for division and gcd."""

    __slots__ = ()

    @classmethod
    def _coerce(cls, c):
        return Fraction(c)

    def monic(self) -> "RationalPolynomial":
        if self.is_zero():
            return self
        lc = self.leading
        return RationalPolynomial(c / lc for c in self.coeffs)

    def divmod(self, other: "RationalPolynomial") -> tuple["RationalPolynomial", "RationalPolynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RationalPolynomial([]), RationalPolynomial(rem)
        quot = [Fraction(0)] * (dq + 1)
        lc = other.leading
        db = other.degree
        for k in range(dq, -1, -1):
            c = rem[k + db] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RationalPolynomial(quot), RationalPolynomial(rem[:db])

    def __floordiv__(self, other):
        return self.divmod(_as_rational(other))[0]

    def __mod__(self, other):
        return self.divmod(_as_rational(other))[1]

    def primitive(self) -> ExactPolynomial:
        """Positive rational multiple with coprime integer coefficients."""
        if self.is_zero():
            return ExactPolynomial([])
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        return ExactPolynomial(c // g for c in ints)


def _as_rational(p) -> RationalPolynomial:
    if isinstance(p, RationalPolynomial):
        return p
    if isinstance(p, _DensePoly):
        return RationalPolynomial(p.coeffs)
    return RationalPolynomial(p)


def primitive_part(p: _DensePoly) -> ExactPolynomial:
    return _as_rational(p).primitive()


def _int_coeffs(p: _DensePoly) -> list[int]:
    """Coefficients of the primitive part as a plain list."""
    return list(primitive_part(p).coeffs)


def _strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _content_free(c: list[int]) -> list[int]:
    g = 0
    for x in c:
        g = gcd(g, x)
    return [x // g for x in c] if g > 1 else c


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """|lc(b)|^k * a mod b over the integers, with k = deg a - deg b + 1.

    The scale is positive, so the result has the sign of the true remainder.
    """
    rem = list(a)
    lc, db = b[-1], len(b) - 1
    m, sgn = abs(lc), (1 if lc > 0 else -1)
    while len(rem) - 1 >= db and rem:
        c, shift = rem[-1] * sgn, len(rem) - 1 - db
        rem = [x * m for x in rem]
        for j, y in enumerate(b):
            rem[shift + j] -= c * y
        _strip(rem)
    return rem


def poly_gcd(f: _DensePoly, g: _DensePoly) -> ExactPolynomial:
    """Greatest common divisor, returned primitive with positive leading coefficient.

    Primitive pseudo-remainder sequence, integers only; the gcd over Q is
    only defined up to a scalar so rescaling the inputs is harmless.
    """
    a = _int_coeffs(f) if not f.is_zero() else []
    b = _int_coeffs(g) if not g.is_zero() else []
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _content_free(_pseudo_rem(a, b))
    if not a:
        return ExactPolynomial([])
    p = ExactPolynomial(_content_free(a))
    return -p if p.leading < 0 else p


def _int_exact_quotient(f: list[int], g: list[int]) -> list[int] | None:
    """f / g when every step divides exactly over the integers, else None."""
    rem = list(f)
    dq = len(rem) - len(g)
    if dq < 0:
        return None
    quot = [0] * (dq + 1)
    lc, db = g[-1], len(g) - 1
    for k in range(dq, -1, -1):
        c, r = divmod(rem[k + db], lc)
        if r:
            return None
        quot[k] = c
        if c:
            for j, y in enumerate(g):
                rem[k + j] -= c * y
    return quot if not any(rem[:db]) else None


def exact_quotient(f: _DensePoly, g: _DensePoly) -> RationalPolynomial:
    fc, gc = f.coeffs, g.coeffs
    if gc and all(type(c) is int or (isinstance(c, Fraction) and c.denominator == 1) for c in fc + gc):
        q = _int_exact_quotient([int(c) for c in fc], [int(c) for c in gc])
        if q is not None:
            return RationalPolynomial(q)
    q, r = _as_rational(f).divmod(_as_rational(g))
    if not r.is_zero():
        raise ArithmeticError("division is not exact")
    return q


# ---------------------------------------------------------------------------
# rendering


def render(coeffs: Sequence, var: str = "t") -> str:
    """Human form ``1 + 5t + 5t^2 + t^3``."""
    if not coeffs or all(c == 0 for c in coeffs):
        return "0"
    parts: list[str] = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}" if isinstance(mag, int) else f"({mag}){mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# small constructors

ONE = ExactPolynomial([1])
T = ExactPolynomial([0, 1])
ONE_PLUS_T = ExactPolynomial([1, 1])


def one_plus_t_power(k: int) -> ExactPolynomial:
    return ExactPolynomial(comb(k, i) for i in range(k + 1))


def from_roots(roots: Sequence, leading: int = 1) -> RationalPolynomial:
    p = RationalPolynomial([leading])
    for r in roots:
        p = p * RationalPolynomial([-Fraction(r), 1])
    return p


# ---------------------------------------------------------------------------
# binomial basis and gamma vectors


def hstar_from_counts(counts: Sequence, d: int) -> ExactPolynomial:
    """Solve E(n) = sum_i h_i C(n+d-i, d), n = 0..d, for h (forward substitution)."""
    if d < 0:
        raise DomainError("dimension must be non-negative")
    if len(counts) != d + 1:
        raise DomainError(f"need {d + 1} counts for dimension {d}, got {len(counts)}")
    h: list[Fraction] = []
    for n in range(d + 1):
        acc = Fraction(counts[n])
        for i in range(n):
            acc -= h[i] * comb(n + d - i, d)
        h.append(acc)
    if any(c.denominator != 1 for c in h):
        raise InconsistentCountsError(f"non-integer h* solution {h} from counts {list(counts)}")
    return ExactPolynomial(int(c) for c in h)


def ehrhart_from_hstar(h: _DensePoly, d: int, n: int) -> int:
    return sum(c * comb(n + d - i, d) for i, c in enumerate(h.coeffs) if n + d - i >= 0)


def is_palindromic(p: _DensePoly, d: int) -> bool:
    if p.degree > d:
        return False
    padded = [p[i] for i in range(d + 1)]
    return padded == padded[::-1]


def gamma_extract(p: _DensePoly, d: int) -> ExactPolynomial | None:
    """The unique gamma with p = sum_i gamma_i t^i (1+t)^(d-2i).

    Coefficients are peeled from the bottom: after subtracting the lower
    terms, the t^i coefficient of the remainder is gamma_i. Returns ``None``
    when a gamma_i is not an integer or the peeling leaves a remainder.
    Sign is not inspected; see :func:`is_gamma_positive`.
    """
    if not is_palindromic(p, d):
        raise DomainError(f"gamma vector requested for non-palindromic {p} at degree {d}")
    rem = RationalPolynomial(p.coeffs)
    gammas: list[Fraction] = []
    for i in range(d // 2 + 1):
        g = rem[i]
        gammas.append(g)
        if g:
            rem = rem - RationalPolynomial(one_plus_t_power(d - 2 * i).shift(i).coeffs) * g
    if not rem.is_zero() or any(g.denominator != 1 for g in gammas):
        return None
    return ExactPolynomial(int(g) for g in gammas)


def gamma_assemble(gamma: _DensePoly, d: int) -> ExactPolynomial:
    acc = ExactPolynomial([])
    for i, g in enumerate(gamma.coeffs):
        if g:
            acc = acc + one_plus_t_power(d - 2 * i).shift(i) * g
    return acc


def is_gamma_positive(gamma: _DensePoly | None) -> bool:
    return gamma is not None and all(c >= 0 for c in gamma.coeffs)


def is_log_concave(p: _DensePoly) -> bool:
    c = p.coeffs
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def is_unimodal(p: _DensePoly) -> bool:
    c = list(p.coeffs)
    k = 0
    while k + 1 < len(c) and c[k] <= c[k + 1]:
        k += 1
    while k + 1 < len(c) and c[k] >= c[k + 1]:
        k += 1
    return k >= len(c) - 1


# ---------------------------------------------------------------------------
# square-free decomposition and Sturm sequences


def squarefree_decomposition(p: _DensePoly) -> list[tuple[ExactPolynomial, int]]:
    """Yun's algorithm over Q. Returns primitive (factor, multiplicity) pairs, factors of degree >= 1."""
    if p.is_zero():
        raise DomainError("square-free decomposition of the zero polynomial")
    f = _as_rational(p)
    if f.degree == 0:
        return []
    fp = f.derivative()
    a0 = _as_rational(poly_gcd(f, fp))
    b = exact_quotient(f, a0)
    c = exact_quotient(fp, a0)
    d = c - b.derivative()
    out: list[tuple[ExactPolynomial, int]] = []
    i = 1
    while b.degree > 0:
        a = _as_rational(poly_gcd(b, d))
        b = exact_quotient(b, a)
        c = exact_quotient(d, a)
        d = c - b.derivative()
        if a.degree > 0:
            prim = a.primitive()
            out.append((-prim if prim.leading < 0 else prim, i))
        i += 1
    return out


def squarefree_part(p: _DensePoly) -> ExactPolynomial:
    prim = primitive_part(p)
    g = poly_gcd(prim, prim.derivative())
    q = exact_quotient(prim, g).primitive()
    return -q if q.leading < 0 else q


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of a square-free polynomial, each entry scaled to a positive primitive form."""

    polys: tuple[ExactPolynomial, ...]

    @classmethod
    def of(cls, p: _DensePoly) -> "SturmChain":
        p0 = primitive_part(p)
        if p0.leading < 0:
            p0 = -p0
        chain = [p0]
        if p0.degree >= 1:
            chain.append(primitive_part(p0.derivative()))
            while chain[-1].degree > 0:
                r = _content_free(_pseudo_rem(list(chain[-2].coeffs), list(chain[-1].coeffs)))
                if not r:
                    break
                chain.append(-ExactPolynomial(r))
        return cls(tuple(chain))

    def variations_at(self, x) -> int:
        signs = [s for s in (q.sign_at(x) for q in self.polys) if s]
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    def variations_at_infinity(self, positive: bool) -> int:
        signs = []
        for q in self.polys:
            s = 1 if q.leading > 0 else -1
            if not positive and q.degree % 2 == 1:
                s = -s
            signs.append(s)
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    def count_real(self) -> int:
        return self.variations_at_infinity(False) - self.variations_at_infinity(True)

    def count_in(self, lo, hi) -> int:
        """Distinct roots in the half-open interval (lo, hi]."""
        return self.variations_at(lo) - self.variations_at(hi)


def sturm_real_root_count(p: _DensePoly) -> int:
    """Number of distinct real roots of a non-zero polynomial."""
    if p.is_zero():
        raise DomainError("root count of the zero polynomial")
    if p.degree == 0:
        return 0
    return SturmChain.of(squarefree_part(p)).count_real()


def real_root_multiplicities(p: _DensePoly) -> list[tuple[ExactPolynomial, int, int]]:
    """(square-free factor, multiplicity, number of its real roots) for each factor."""
    return [(f, m, SturmChain.of(f).count_real()) for f, m in squarefree_decomposition(p)]


def is_real_rooted(p: _DensePoly) -> bool:
    if p.is_zero():
        raise DomainError("real-rootedness of the zero polynomial")
    return sum(m * r for _, m, r in real_root_multiplicities(p)) == p.degree


# ---------------------------------------------------------------------------
# root isolation


def _cauchy_bound(p: _DensePoly) -> Fraction:
    lc = abs(Fraction(p.leading))
    m = max((abs(Fraction(c)) for c in p.coeffs[:-1]), default=Fraction(0))
    bound = 1 + m / lc
    # round up to a power of two so that bisection midpoints are dyadic and hit small integers
    k = 1
    while k < bound:
        k *= 2
    return Fraction(k)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


_RATIONAL_ROOT_LC_LIMIT = 10**8


def _refine_by_sign(sq: ExactPolynomial, lo: Fraction, hi: Fraction, max_width: Fraction):
    """Bisect an open isolating interval (sign change, no root at the ends) until narrow."""
    slo = sq.sign_at(lo)
    while hi - lo > max_width:
        mid = (lo + hi) / 2
        sm = sq.sign_at(mid)
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _exact_rational_root(sq: ExactPolynomial, lo: Fraction, hi: Fraction):
    """Snap an isolating interval to its root when that root is rational.

    A rational root u/v of a primitive integer polynomial has v | lc. Once the
    interval is narrower than 1/|lc| each admissible v leaves at most one
    candidate numerator.
    """
    lc = abs(sq.leading)
    if lc > _RATIONAL_ROOT_LC_LIMIT:
        return lo, hi
    lo, hi = _refine_by_sign(sq, lo, hi, Fraction(1, 2 * lc))
    if lo == hi:
        return lo, hi
    for v in _divisors(lc):
        u = (lo * v).__floor__() + 1
        cand = Fraction(u, v)
        if lo < cand < hi and sq.sign_at(cand) == 0:
            return cand, cand
    return lo, hi


def _isolate_squarefree(sq: ExactPolynomial, chain: SturmChain | None = None) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for the real roots of a square-free integer polynomial.

    Each result is either a point ``(r, r)`` with ``sq(r) == 0`` or an open
    interval ``(lo, hi)`` holding exactly one root, with ``sq`` non-zero at
    both ends. Rational roots are always returned as points. Sorted ascending.
    """
    if sq.degree < 1:
        return []
    if sq.degree == 1:
        r = Fraction(-sq[0], sq[1])
        return [(r, r)]
    chain = chain or SturmChain.of(sq)
    bound = _cauchy_bound(sq)
    out: list[tuple[Fraction, Fraction]] = []
    # work items carry the number of roots strictly inside (lo, hi)
    stack = [(-bound, bound, chain.count_in(-bound, bound))]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1 and sq.sign_at(lo) != 0 and sq.sign_at(hi) != 0:
            out.append(_exact_rational_root(sq, lo, hi))
            continue
        mid = (lo + hi) / 2
        at_mid = 1 if sq.sign_at(mid) == 0 else 0
        if at_mid:
            out.append((mid, mid))
        left = chain.count_in(lo, mid) - at_mid
        stack.append((mid, hi, cnt - left - at_mid))
        stack.append((lo, mid, left))
    out.sort()
    return out


def _root_in(factor: ExactPolynomial, lo: Fraction, hi: Fraction) -> bool:
    """Whether ``factor`` vanishes at the root isolated by (lo, hi).

    Valid only when the roots of ``factor`` are among those of the isolating
    polynomial, so an open interval contains at most one of them and neither
    end is a root.
    """
    if lo == hi:
        return factor.sign_at(lo) == 0
    return factor.sign_at(lo) * factor.sign_at(hi) < 0


@dataclass(frozen=True)
class RootIsolation:
    """Ascending isolating intervals ``(lo, hi, multiplicity)`` of a real-rooted polynomial."""

    intervals: tuple[tuple[Fraction, Fraction, int], ...]
    sqfree: ExactPolynomial = field(compare=False, repr=False)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, _, m in self.intervals)

    def refined(self, max_width) -> "RootIsolation":
        """Bisect every open interval until it is at most ``max_width`` wide."""
        max_width = Fraction(max_width)
        out = []
        for lo, hi, m in self.intervals:
            if lo != hi:
                lo, hi = _refine_by_sign(self.sqfree, lo, hi, max_width)
            out.append((lo, hi, m))
        return RootIsolation(tuple(out), self.sqfree)

    def expanded_descending(self) -> list[tuple[Fraction, Fraction]]:
        """Root list a_1 >= a_2 >= ... with each root repeated by its multiplicity."""
        return [(lo, hi) for lo, hi, m in reversed(self.intervals) for _ in range(m)]


def isolate_roots(p: _DensePoly) -> RootIsolation:
    if p.is_zero():
        raise DomainError("root isolation of the zero polynomial")
    factors = real_root_multiplicities(p)
    if sum(m * r for _, m, r in factors) != p.degree:
        raise DomainError(f"{p} is not real-rooted")
    sq = squarefree_part(p) if p.degree > 0 else ExactPolynomial([1])
    intervals = []
    for lo, hi in _isolate_squarefree(sq):
        mult = sum(m for f, m, _ in factors if _root_in(f, lo, hi))
        intervals.append((lo, hi, mult))
    return RootIsolation(tuple(intervals), sq)


def _joint_root_pattern(f: _DensePoly, g: _DensePoly) -> tuple[list[int], list[int]]:
    """Multiplicity-expanded root sequences of f and g, descending, as ranks of one common order.

    Roots of f*g are isolated together, so equal ranks mean equal roots and
    rank order is exact value order.
    """
    both = squarefree_part(f * g)
    iso = _isolate_squarefree(both)
    dec_f = squarefree_decomposition(f) if f.degree > 0 else []
    dec_g = squarefree_decomposition(g) if g.degree > 0 else []
    seq_f: list[int] = []
    seq_g: list[int] = []
    for rank in range(len(iso) - 1, -1, -1):
        lo, hi = iso[rank]
        seq_f += [rank] * sum(m for fac, m in dec_f if _root_in(fac, lo, hi))
        seq_g += [rank] * sum(m for fac, m in dec_g if _root_in(fac, lo, hi))
    return seq_f, seq_g


def interlaces(g: _DensePoly, f: _DensePoly) -> bool:
    """Decide whether g interlaces f: roots a_i of f and b_i of g satisfy a_1 >= b_1 >= a_2 >= b_2 >= ...

    Both inputs must be real-rooted. Constants are accepted and interlace
    vacuously whenever the degree condition deg g <= deg f <= deg g + 1 holds.
    """
    if f.is_zero() or g.is_zero():
        raise DomainError("interlacing with the zero polynomial")
    for p in (f, g):
        if p.degree > 0 and not is_real_rooted(p):
            raise DomainError(f"{p} is not real-rooted")
    if not (g.degree <= f.degree <= g.degree + 1):
        return False
    if f.degree == 0:
        return True
    seq_f, seq_g = _joint_root_pattern(f, g)
    merged = []
    for i, a in enumerate(seq_f):
        merged.append(a)
        if i < len(seq_g):
            merged.append(seq_g[i])
    return all(x >= y for x, y in zip(merged, merged[1:]))
