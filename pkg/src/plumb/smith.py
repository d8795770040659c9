"""Smith normal form over Q[t] and the nullity counts it yields."""

from __future__ import annotations

from plumb.linalg import as_rows
from plumb.polynomials import Poly, coprime_basis, multiplicity


def _entry_key(p: Poly, i: int, j: int):
    return (p.degree, i, j)


def smith_normal_form(m) -> list[Poly]:
    """Invariant factors of a square matrix over Q[t], monic, alpha_i | alpha_{i+1}.

    Entries may be ``Poly`` or constants. Zero invariant factors come last.
    Pivot choice: lowest-degree nonzero entry of the trailing block, ties by
    position (row-major).
    """
    a = [[x if isinstance(x, Poly) else Poly([x]) for x in r] for r in m]
    n = len(a)
    for r in a:
        if len(r) != n:
            raise ValueError("matrix is not square")
    factors: list[Poly] = []
    for k in range(n):
        while True:
            cands = [(_entry_key(a[i][j], i, j), i, j)
                     for i in range(k, n) for j in range(k, n) if a[i][j]]
            if not cands:
                factors.extend(Poly() for _ in range(n - k))
                return factors
            _, pi, pj = min(cands)
            a[k], a[pi] = a[pi], a[k]
            for r in a:
                r[k], r[pj] = r[pj], r[k]
            p = a[k][k]
            dirty = False
            for i in range(k + 1, n):
                if a[i][k]:
                    q, rem = divmod(a[i][k], p)
                    a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                    dirty |= bool(rem)
            for j in range(k + 1, n):
                if a[k][j]:
                    q, rem = divmod(a[k][j], p)
                    for r in a:
                        r[j] = r[j] - q * r[k]
                    dirty |= bool(rem)
            if dirty:
                continue
            # row and column k are clear; enforce divisibility of the rest
            bad = next(((i, j) for i in range(k + 1, n) for j in range(k + 1, n)
                        if a[i][j] and not p.divides(a[i][j])), None)
            if bad is None:
                break
            i, _ = bad
            a[k] = [x + y for x, y in zip(a[k], a[i])]
        factors.append(a[k][k].monic())
    return factors


def seifert_pencil(a) -> list[list[Poly]]:
    """The polynomial matrix t*A - A^T."""
    rows = as_rows(a)
    n = len(rows)
    return [[Poly([-rows[j][i], rows[i][j]]) for j in range(n)] for i in range(n)]


def nullity_at_factor(a, f: Poly, factors: list[Poly] | None = None) -> int:
    """Number of invariant factors of t*A - A^T divisible by f.

    For irreducible f (or any element of a coprime basis of the invariant
    factors) this is the nullity of w*A - A^T at every root w of f.
    """
    if factors is None:
        factors = smith_normal_form(seifert_pencil(a))
    return sum(1 for alpha in factors if f.divides(alpha))


def root_orders(factors: list[Poly]) -> list[tuple[Poly, int, int]]:
    """For each element b of a coprime basis of the nonzero invariant factors:
    (b, order of every root of b in their product, nullity at every root of b).
    """
    nonzero = [f for f in factors if f]
    out = []
    for b in coprime_basis(nonzero):
        order = sum(multiplicity(b, f) for f in nonzero)
        nullity = sum(1 for f in factors if b.divides(f))
        out.append((b, order, nullity))
    return out
