"""Exact linear algebra over the integers, rationals and Gaussian rationals.

Everything here works on plain nested sequences (lists, tuples or numpy
arrays of integers / ``Fraction``) and never touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Sequence

from plumb.polynomials import Poly, interpolate

Number = int | Fraction


class Inertia(NamedTuple):
    positive: int
    negative: int
    zero: int

    @property
    def signature(self) -> int:
        return self.positive - self.negative

    @property
    def nullity(self) -> int:
        return self.zero

    def __str__(self) -> str:
        return f"{self.positive} {self.negative} {self.zero}"


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def coerce(x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating point complex numbers are not exact")
        return GaussianRational(Fraction(x), Fraction(0))

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        p = self * o.conjugate()
        return GaussianRational(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


def as_rows(m) -> list[list]:
    """Copy a matrix-like object into a list of lists of exact numbers."""
    rows = [list(r) for r in m]
    for r in rows:
        if len(r) != len(rows):
            raise ValueError("matrix is not square")
    return [[_exact(x) for x in r] for r in rows]


def _exact(x):
    if isinstance(x, (Fraction, GaussianRational)):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not exact")
    return int(x)


def _integerize(rows: list[list[Number]]) -> list[list[int]]:
    # scale by a positive common denominator; preserves inertia and sign of det
    den = 1
    for r in rows:
        for x in r:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
    return [[int(x * den) for x in r] for r in rows]


def is_symmetric(rows) -> bool:
    n = len(rows)
    return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))


def inertia(m) -> Inertia:
    """Exact inertia of a symmetric rational matrix.

    Symmetric congruence elimination with fraction-free (Bareiss) updates. The
    trailing block after each step is an integer multiple of the true Schur
    complement, and the true pivots are ratios of consecutive Bareiss pivots.
    When the trailing block has a zero diagonal but a nonzero off-diagonal
    entry a_ij, row/column j is added to row/column i first.
    """
    rows = as_rows(m)
    if not is_symmetric(rows):
        raise ValueError("inertia requires a symmetric matrix")
    a = _integerize(rows)
    n = len(a)
    pos = neg = 0
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n)
                         if a[i][j] != 0), None)
            if pair is None:
                return Inertia(pos, neg, n - k)
            i, j = pair
            for c in range(k, n):
                a[i][c] += a[j][c]
            for r in range(k, n):
                a[r][i] += a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for r in a:
                r[k], r[piv] = r[piv], r[k]
        p = a[k][k]
        if (p > 0) == (prev > 0):
            pos += 1
        else:
            neg += 1
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (p * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        for j in range(k + 1, n):
            rk[j] = 0
        prev = p
    return Inertia(pos, neg, 0)


def signature(m) -> int:
    return inertia(m).signature


def realify(h) -> list[list[Fraction]]:
    """The real symmetric 2n x 2n matrix [[X, -Y], [Y, X]] of H = X + iY."""
    rows = [[GaussianRational.coerce(x) for x in r] for r in h]
    n = len(rows)
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            x, y = rows[i][j].re, rows[i][j].im
            out[i][j] = x
            out[i + n][j + n] = x
            out[i][j + n] = -y
            out[i + n][j] = y
    return out


def hermitian_inertia(h) -> Inertia:
    rows = [[GaussianRational.coerce(x) for x in r] for r in h]
    n = len(rows)
    for i in range(n):
        if len(rows[i]) != n:
            raise ValueError("matrix is not square")
        for j in range(i, n):
            if rows[i][j] != rows[j][i].conjugate():
                raise ValueError("matrix is not Hermitian")
    doubled = inertia(realify(rows))
    if any(c % 2 for c in doubled):
        raise ArithmeticError(f"realified inertia {tuple(doubled)} has an odd count")
    return Inertia(*(c // 2 for c in doubled))


def determinant(m) -> Fraction | int:
    """Exact determinant by fraction-free Bareiss elimination."""
    rows = as_rows(m)
    n = len(rows)
    if n == 0:
        return 1
    den = 1
    for r in rows:
        for x in r:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
    a = [[int(x * den) for x in r] for r in rows]
    d = _bareiss(a)
    if den == 1:
        return d
    return Fraction(d, den ** n)


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        p = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (p * ri[j] - aik * rk[j]) // prev
        prev = p
    return sign * a[n - 1][n - 1]


def _det_poly(n: int, evaluate) -> Poly:
    # degree <= n, so n + 1 sample points determine the polynomial
    xs = list(range(n + 1))
    return interpolate(xs, [evaluate(x) for x in xs])


def _det_of(rows) -> Fraction | int:
    # integer fast path; Bareiss works in place on a fresh copy
    if all(type(x) is int for r in rows for x in r):
        return _bareiss(rows) if rows else 1
    return determinant(rows)


def char_poly(m) -> Poly:
    """det(t*I - m) via exact evaluation at integer points and interpolation."""
    rows = as_rows(m)
    n = len(rows)

    def at(x):
        return _det_of([[(x if i == j else 0) - rows[i][j] for j in range(n)]
                        for i in range(n)])

    return _det_poly(n, at)


def alexander_poly(a) -> Poly:
    """det(t*A - A^T); may be the zero polynomial."""
    rows = as_rows(a)
    n = len(rows)

    def at(x):
        return _det_of([[x * rows[i][j] - rows[j][i] for j in range(n)]
                        for i in range(n)])

    return _det_poly(n, at)


def matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> list[list[Number]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def transpose(a) -> list[list]:
    return [list(c) for c in zip(*a)]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]
