"""Dense univariate polynomials with exact rational coefficients.

Also hosts the real-root machinery built on them: square-free decomposition,
Sturm sequences, the reciprocal split and the x = t + 1/t rewriting used to
count and isolate roots on the unit circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt, lcm
from typing import Iterable, NamedTuple


def _norm(c) -> int | Fraction:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not exact")
    return int(c)


class Poly:
    """Polynomial with coefficients listed lowest degree first.

    Integral coefficients are stored as ``int``; the class doubles as the
    integer and the rational polynomial type.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def t(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> Poly:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        o = _coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        o = _coerce(other)
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(o.coeffs):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        d = _coerce(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        q = [Fraction(0)] * max(len(r) - d.degree, 0)
        lc = Fraction(d.lc)
        dc = d.coeffs
        for k in range(len(r) - 1 - d.degree, -1, -1):
            c = r[k + d.degree] / lc
            q[k] = c
            if c:
                for j, y in enumerate(dc):
                    r[k + j] -= c * y
        return Poly(q), Poly(r[:d.degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other) -> bool:
        """True iff self | other."""
        if self.is_zero():
            return _coerce(other).is_zero()
        return (_coerce(other) % self).is_zero()

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def reverse(self) -> Poly:
        """t^deg * p(1/t)."""
        return Poly(reversed(self.coeffs))

    def substitute_neg(self) -> Poly:
        """p(-t)."""
        return Poly(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def content(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        fr = [Fraction(c) for c in self.coeffs]
        num = abs(reduce(gcd, (f.numerator for f in fr)))
        den = reduce(lcm, (f.denominator for f in fr))
        return Fraction(num, den)

    def primitive(self) -> Poly:
        """Integer polynomial with coprime coefficients and positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return Poly(Fraction(x) / c for x in self.coeffs)

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        lc = Fraction(self.lc)
        return Poly(Fraction(c) / lc for c in self.coeffs)

    def valuation(self) -> int:
        """Multiplicity of the root t = 0 (zero polynomial -> 0)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    def shift_down(self, k: int) -> Poly:
        return Poly(self.coeffs[k:])

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    @classmethod
    def from_text(cls, text: str) -> Poly:
        return cls(Fraction(tok) for tok in text.split())


def _coerce(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


def _prem(a: list[int], b: list[int]) -> list[int]:
    # integer pseudo-remainder of a by b (coefficients lowest degree first)
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and any(r):
        c, shift = r[-1], len(r) - 1 - db
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= c * y
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _primitive_ints(c: list[int]) -> list[int]:
    g = reduce(gcd, c, 0)
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd over Q (positive leading coefficient); gcd(0, 0) = 0."""
    a, b = a.primitive(), b.primitive()
    if a.is_zero():
        return b
    x, y = [int(c) for c in a.coeffs], [int(c) for c in b.coeffs]
    while y:
        r = _prem(x, y)
        x, y = y, (_primitive_ints(r) if r else [])
    return Poly(x)


def interpolate(xs, ys) -> Poly:
    """Newton interpolation through the points (xs[i], ys[i]), exactly."""
    xs = [Fraction(x) for x in xs]
    coef = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Poly([coef[-1]]) if n else Poly()
    for i in range(n - 2, -1, -1):
        p = p * Poly([-xs[i], 1]) + coef[i]
    return p


def equal_up_to_unit(p: Poly, q: Poly) -> bool:
    """True iff p = +-t^k q for some integer k."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    a = p.shift_down(p.valuation())
    b = q.shift_down(q.valuation())
    return a == b or a == -b


# --------------------------------------------------------------------------
# square-free decomposition and coprime bases


class SquarefreeDecomposition(NamedTuple):
    factors: list[tuple[Poly, int]]
    unit: Fraction

    def expand(self) -> Poly:
        p = Poly([self.unit])
        for f, m in self.factors:
            p = p * f ** m
        return p


def squarefree_decomposition(p: Poly) -> SquarefreeDecomposition:
    """Yun's algorithm over Q; factors are primitive integer polynomials."""
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    factors: list[tuple[Poly, int]] = []
    if p.degree > 0:
        dp = p.derivative()
        a = poly_gcd(p, dp)
        b = p.exact_div(a)
        c = dp.exact_div(a)
        d = c - b.derivative()
        i = 1
        while b.degree > 0:
            g = poly_gcd(b, d)
            if g.degree > 0:
                factors.append((g, i))
            b = b.exact_div(g)
            c = d.exact_div(g)
            d = c - b.derivative()
            i += 1
    expanded = Poly([1])
    for f, m in factors:
        expanded = expanded * f ** m
    unit = Fraction(p.lc) / Fraction(expanded.lc)
    return SquarefreeDecomposition(factors, unit)


def coprime_basis(polys: Iterable[Poly]) -> list[Poly]:
    """Pairwise coprime square-free primitive polynomials of positive degree
    such that every input is, up to a constant, a product of their powers."""
    basis: list[Poly] = []
    for p in polys:
        if p.is_zero() or p.degree <= 0:
            continue
        for f, _ in squarefree_decomposition(p).factors:
            basis = _refine(basis, f)
    return sorted(basis, key=lambda f: (f.degree, f.coeffs))


def _refine(basis: list[Poly], f: Poly) -> list[Poly]:
    out: list[Poly] = []
    pending = [f]
    for b in basis:
        nxt = []
        for g in pending:
            h = poly_gcd(b, g)
            if h.degree > 0:
                out.append(h)
                rest_b = b.exact_div(h)
                if rest_b.degree > 0:
                    out = _refine(out, rest_b.primitive())
                rest_g = g.exact_div(h)
                if rest_g.degree > 0:
                    nxt.append(rest_g.primitive())
                b = Poly([1])
            else:
                nxt.append(g)
        if b.degree > 0:
            out.append(b)
        pending = nxt
    return out + pending


def multiplicity(f: Poly, p: Poly) -> int:
    """Largest m with f^m | p (p nonzero, deg f > 0)."""
    m = 0
    while True:
        q, r = divmod(p, f)
        if r:
            return m
        p = q
        m += 1


# --------------------------------------------------------------------------
# Sturm sequences


def sturm_sequence(p: Poly) -> list[Poly]:
    """Sturm chain of p; each remainder is rescaled by a positive constant."""
    def scaled(q: Poly) -> Poly:
        # divide by the positive content only; signs carry the information
        c = q.content()
        return Poly(Fraction(x) / c for x in q.coeffs)

    seq = [scaled(p), scaled(p.derivative())]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-scaled(r))
    return [s for s in seq if s]


def _sign_changes(seq: list[Poly], x) -> int:
    signs = [v for v in (s(x) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_real_roots(p: Poly, lo, hi, seq: list[Poly] | None = None) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    if seq is None:
        seq = sturm_sequence(p)
    return _sign_changes(seq, Fraction(lo)) - _sign_changes(seq, Fraction(hi))


def cauchy_bound(p: Poly) -> Fraction:
    """Every complex root of p has modulus strictly below the returned value."""
    lc = abs(Fraction(p.lc))
    return 1 + max((abs(Fraction(c)) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def open_interval_count(f: Poly, lo, hi, seq=None) -> int:
    # distinct roots of square-free f in (lo, hi)
    n = count_real_roots(f, lo, hi, seq)
    return n - (1 if f(Fraction(hi)) == 0 else 0)


def _factors(p: Poly, sqf: SquarefreeDecomposition | None):
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    return (sqf or squarefree_decomposition(p)).factors


def positive_real_root_count(p: Poly, sqf: SquarefreeDecomposition | None = None) -> int:
    """Roots in (0, oo), counted with multiplicity."""
    total = 0
    for f, m in _factors(p, sqf):
        total += m * open_interval_count(f, 0, cauchy_bound(f))
    return total


def negative_real_root_count(p: Poly, sqf: SquarefreeDecomposition | None = None) -> int:
    """Roots in (-oo, 0), counted with multiplicity."""
    total = 0
    for f, m in _factors(p, sqf):
        total += m * open_interval_count(f, -cauchy_bound(f), 0)
    return total


# --------------------------------------------------------------------------
# reciprocal polynomials and the unit circle


class ReciprocalSplit(NamedTuple):
    zero_order: int
    one_order: int
    minus_one_order: int
    core: Poly
    sign: int


def is_reciprocal(q: Poly) -> bool:
    return q.reverse() == q


def strip_linear(p: Poly, root: int) -> tuple[int, Poly]:
    """Split off the highest power of (t - root)."""
    lin = Poly([-root, 1])
    m = 0
    while p.degree > 0 and p(root) == 0:
        p = p.exact_div(lin)
        m += 1
    return m, p


def reciprocal_split(p: Poly) -> ReciprocalSplit:
    """Write p = sign * t^a (t-1)^b (t+1)^c q with q reciprocal, q(0), q(+-1) != 0."""
    if p.is_zero():
        raise ValueError("reciprocal split of the zero polynomial")
    a = p.valuation()
    q = p.shift_down(a)
    b, q = strip_linear(q, 1)
    c, q = strip_linear(q, -1)
    sign = 1 if q.lc > 0 else -1
    q = q * sign
    if not is_reciprocal(q):
        raise ValueError(f"residual factor {q} is not reciprocal")
    return ReciprocalSplit(a, b, c, q, sign)


def chebyshev_transform(q: Poly) -> Poly:
    """For reciprocal q of degree 2m return r with q(t) = t^m r(t + 1/t)."""
    if not is_reciprocal(q):
        raise ValueError("chebyshev_transform needs a reciprocal polynomial")
    if q.degree % 2:
        raise ArithmeticError(f"reciprocal factor {q} has odd degree")
    m = q.degree // 2
    x = Poly.t()
    # t^k + t^-k = T_k(x),  T_0 = 2, T_1 = x, T_{k+1} = x T_k - T_{k-1}
    r = Poly([q.coeffs[m]])
    t_prev, t_cur = Poly([2]), x
    for k in range(1, m + 1):
        r = r + t_cur * q.coeffs[m + k]
        t_prev, t_cur = t_cur, x * t_cur - t_prev
    return r


def circle_part(f: Poly) -> tuple[int, int, Poly]:
    """For square-free f, the factor carrying its unit-circle roots.

    Returns (order at 1, order at -1, r) where r is square-free and its
    roots in (-2, 2) are exactly the values x = w + 1/w of the circle roots
    w != +-1 of f (one x per conjugate pair). Works without assuming f is
    reciprocal: circle roots of a real polynomial are common roots of f and
    its reverse.
    """
    f = f.shift_down(f.valuation())
    g = poly_gcd(f, f.reverse())
    b, g = strip_linear(g, 1)
    c, g = strip_linear(g, -1)
    g = g.primitive()
    if g.degree == 0:
        return b, c, Poly([1])
    return b, c, chebyshev_transform(g).primitive()


def circle_root_count(p: Poly, sqf: SquarefreeDecomposition | None = None) -> int:
    """Roots on the unit circle, counted with multiplicity."""
    total = 0
    for f, m in _factors(p, sqf):
        b, c, r = circle_part(f)
        inner = open_interval_count(r, -2, 2) if r.degree > 0 else 0
        total += m * (b + c + 2 * inner)
    return total


@dataclass(frozen=True)
class CircleRoot:
    """A conjugate pair of circle roots located by x = w + 1/w.

    The root lies in the open interval (lo, hi), or equals lo when lo == hi.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int
    factor: Poly

    def contains(self, x) -> bool:
        if self.lo == self.hi:
            return x == self.lo
        return self.lo < x < self.hi


class CircleRoots(NamedTuple):
    roots: list[CircleRoot]
    at_one: int
    at_minus_one: int


def _isolate_one(r: Poly, lo: Fraction, hi: Fraction, seq) -> list[tuple[Fraction, Fraction]]:
    # isolate distinct roots of square-free r inside the open interval (lo, hi)
    n = open_interval_count(r, lo, hi, seq)
    if n == 0:
        return []
    if n == 1:
        return [(lo, hi)]
    mid = (lo + hi) / 2
    out = _isolate_one(r, lo, mid, seq)
    if r(mid) == 0:
        out.append((mid, mid))
    return out + _isolate_one(r, mid, hi, seq)


def _overlap(alo, ahi, blo, bhi) -> bool:
    # intervals are open unless degenerate (lo == hi, an exact root)
    if alo == ahi and blo == bhi:
        return alo == blo
    if alo == ahi:
        return blo < alo < bhi
    if blo == bhi:
        return alo < blo < ahi
    return max(alo, blo) < min(ahi, bhi)


def _tighten(r: Poly, lo: Fraction, hi: Fraction, seq) -> tuple[Fraction, Fraction]:
    if lo == hi:
        return lo, hi
    mid = (lo + hi) / 2
    if r(mid) == 0:
        return mid, mid
    if open_interval_count(r, lo, mid, seq):
        return lo, mid
    return mid, hi


def isolate_circle_roots_of(factors: list[tuple[Poly, int]]) -> CircleRoots:
    """Isolate circle roots for pairwise coprime square-free factors with multiplicities."""
    items = []
    at_one = at_minus_one = 0
    for f, m in factors:
        b, c, r = circle_part(f)
        at_one += m * b
        at_minus_one += m * c
        if r.degree <= 0:
            continue
        seq = sturm_sequence(r)
        for lo, hi in _isolate_one(r, Fraction(-2), Fraction(2), seq):
            items.append([lo, hi, m, f, r, seq])
    # refine until intervals from different factors are pairwise disjoint
    while True:
        clash = False
        for i, a in enumerate(items):
            for b in items[i + 1:]:
                if _overlap(a[0], a[1], b[0], b[1]):
                    clash = True
                    for it in (a, b):
                        it[0], it[1] = _tighten(it[4], it[0], it[1], it[5])
        if not clash:
            break
    items.sort(key=lambda it: (it[0], it[1]))
    roots = [CircleRoot(lo, hi, m, f) for lo, hi, m, f, _, _ in items]
    return CircleRoots(roots, at_one, at_minus_one)


def isolate_circle_roots(p: Poly) -> CircleRoots:
    """Disjoint rational x-intervals, x = w + 1/w, one per conjugate pair of
    circle roots w != +-1 (ascending in x), plus multiplicities at w = +-1."""
    if p.is_zero():
        raise ValueError("root isolation for the zero polynomial")
    return isolate_circle_roots_of(squarefree_decomposition(p).factors)


def refine_root(root: CircleRoot) -> CircleRoot:
    _, _, r = circle_part(root.factor)
    lo, hi = _tighten(r, root.lo, root.hi, sturm_sequence(r))
    return CircleRoot(lo, hi, root.multiplicity, root.factor)


# --------------------------------------------------------------------------
# rational helpers


def sqrt_bounds(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rationals lo <= sqrt(q) <= hi with hi - lo <= 2**-bits."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("square root of a negative number")
    scale = 1 << (2 * bits)
    num = q.numerator * q.denominator * scale
    s = isqrt(num)
    den = q.denominator * (1 << bits)
    lo = Fraction(s, den)
    hi = lo if s * s == num else Fraction(s + 1, den)
    return lo, hi


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator in the open interval (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    fl = lo.numerator // lo.denominator
    if fl + 1 < hi:
        if lo < 0 < hi:
            return Fraction(0)
        if lo >= 0:
            return Fraction(fl + 1)
        return Fraction(-((-hi).numerator // (-hi).denominator) - 1)
    # (lo, hi) lies inside [fl, fl + 1]; write x = fl + 1/y
    if lo == fl:
        return fl + 1 / Fraction(int(1 / (hi - fl)) + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))
