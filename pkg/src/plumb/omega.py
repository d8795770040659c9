"""Levine-Tristram signatures on the unit circle, computed exactly.

Points of the circle are parametrized by a rational u:

    w(u) = ((1 - u^2) + 2u i) / (1 + u^2),     x = w + 1/w = 2(1 - u^2)/(1 + u^2)

so u = tan(theta/2); u = 0 is w = 1, u -> oo is w = -1 (kept as the
sentinel MINUS_ONE). For u = a/b with b > 0,

    M_w = (1 - w)A + (1 - conj w)A^T = c * ((a - bi)A + (a + bi)A^T)

with c of the sign of a, so every signature reduces to the inertia of a
Gaussian-integer Hermitian matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from plumb import linalg
from plumb.linalg import GaussianRational
from plumb.polynomials import (
    CircleRoot,
    Poly,
    circle_part,
    circle_root_count,
    isolate_circle_roots,
    multiplicity,
    open_interval_count,
    refine_root,
    simplest_between,
    sqrt_bounds,
)
from plumb.smith import root_orders, seifert_pencil, smith_normal_form


@dataclass(frozen=True)
class CirclePoint:
    u: Fraction | None

    def __post_init__(self):
        if self.u is not None:
            object.__setattr__(self, "u", Fraction(self.u))

    @property
    def is_minus_one(self) -> bool:
        return self.u is None

    def omega(self) -> GaussianRational:
        if self.u is None:
            return GaussianRational(Fraction(-1), Fraction(0))
        d = 1 + self.u * self.u
        return GaussianRational((1 - self.u * self.u) / d, 2 * self.u / d)

    def x(self) -> Fraction:
        if self.u is None:
            return Fraction(-2)
        return 2 * (1 - self.u * self.u) / (1 + self.u * self.u)

    def __str__(self):
        return "-1" if self.u is None else f"u={self.u}"


MINUS_ONE = CirclePoint(None)


def _rows(a) -> list[list[int]]:
    rows = a.tolist() if hasattr(a, "tolist") else [list(r) for r in a]
    return [[int(x) for x in r] for r in rows]


def omega_matrix(a, p: CirclePoint) -> list[list[GaussianRational]]:
    """A positive multiple of M_w (a negative one when u < 0, see omega_signature)."""
    rows = _rows(a)
    n = len(rows)
    if p.is_minus_one:
        return [[GaussianRational.coerce(2 * (rows[i][j] + rows[j][i])) for j in range(n)]
                for i in range(n)]
    num, den = p.u.numerator, p.u.denominator
    return [[GaussianRational(Fraction(num * (rows[i][j] + rows[j][i])),
                              Fraction(den * (rows[j][i] - rows[i][j])))
             for j in range(n)] for i in range(n)]


def omega_signature(a, p: CirclePoint) -> int:
    if not p.is_minus_one and p.u == 0:
        return 0
    sig = linalg.hermitian_inertia(omega_matrix(a, p)).signature
    if not p.is_minus_one and p.u < 0:
        sig = -sig
    return sig


def _eval(poly: Poly, w: GaussianRational) -> GaussianRational:
    acc = GaussianRational(Fraction(0), Fraction(0))
    for c in reversed(poly.coeffs):
        acc = acc * w + GaussianRational.coerce(c)
    return acc


def _u_interval(x_lo: Fraction, x_hi: Fraction, bits: int):
    """Rational u-bounds strictly inside the preimage of the x-interval (x_lo, x_hi)."""
    # u is decreasing in x; u(2) = 0 and u(-2) = oo
    lower = Fraction(0) if x_hi >= 2 else sqrt_bounds((2 - x_hi) / (2 + x_hi), bits)[1]
    upper = None if x_lo <= -2 else sqrt_bounds((2 - x_lo) / (2 + x_lo), bits)[0]
    return lower, upper


def _gaps(roots: list[CircleRoot]):
    # open x-gaps between consecutive roots, from x = 2 down to x = -2
    edges = [Fraction(2)]
    for r in roots:
        edges += [r.hi, r.lo]
    edges.append(Fraction(-2))
    return [(edges[2 * k + 1], edges[2 * k]) for k in range(len(roots) + 1)]


def _pick(x_lo: Fraction, x_hi: Fraction, delta: Poly) -> CirclePoint | None:
    for bits in range(4, 200, 4):
        lower, upper = _u_interval(x_lo, x_hi, bits)
        if upper is None:
            u = Fraction(lower.numerator // lower.denominator + 1)
        elif lower < upper:
            u = simplest_between(lower, upper)
        else:
            continue
        if u <= 0:
            continue
        p = CirclePoint(u)
        if _eval(delta, p.omega()):
            return p
        return None
    return None


def _isolated_upper_roots(delta: Poly):
    iso = isolate_circle_roots(delta)
    # theta increasing means x decreasing
    roots = sorted(iso.roots, key=lambda r: (r.lo, r.hi), reverse=True)
    return iso, roots


def _separate(delta: Poly):
    iso, roots = _isolated_upper_roots(delta)
    while True:
        points = []
        retry = None
        for k, (x_lo, x_hi) in enumerate(_gaps(roots)):
            p = _pick(x_lo, x_hi, delta) if x_lo < x_hi else None
            if p is None:
                retry = k
                break
            points.append(p)
        if retry is None:
            return iso, roots, points
        # shrink the roots bounding the failing gap and try again
        for j in (retry - 1, retry):
            if 0 <= j < len(roots):
                roots[j] = refine_root(roots[j])


def separating_points(a) -> list[CirclePoint]:
    """One certified point in every gap between consecutive upper-semicircle roots of Delta.

    The list runs in increasing argument, starting below the first root. When
    Delta(-1) = 0 the last entry is still a rational point before theta = pi.
    """
    delta = linalg.alexander_poly(_rows(a))
    if delta.is_zero():
        raise ValueError("Alexander polynomial is identically zero")
    return _separate(delta)[2]


class ProfileRoot(NamedTuple):
    x_lo: Fraction
    x_hi: Fraction
    multiplicity: int
    index: int
    factor: Poly


@dataclass(frozen=True)
class SignatureProfile:
    roots: tuple[ProfileRoot, ...]
    points: tuple[CirclePoint, ...]
    plateau_values: tuple[int, ...]
    jumps: tuple[int, ...]
    sigma_at_minus_one: int
    order_at_one: int
    order_at_minus_one: int

    def to_json(self) -> dict:
        return {
            "roots": [{"x_lo": str(r.x_lo), "x_hi": str(r.x_hi), "mult": r.multiplicity}
                      for r in self.roots],
            "plateaus": list(self.plateau_values),
            "jumps": list(self.jumps),
            "sigma_minus_one": self.sigma_at_minus_one,
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def render_text(self) -> str:
        lines = [f"plateau 0: sigma = {self.plateau_values[0]}  (sample {self.points[0]})"]
        for r, j, v, p in zip(self.roots, self.jumps, self.plateau_values[1:], self.points[1:]):
            where = f"x = {r.x_lo}" if r.x_lo == r.x_hi else f"x in ({r.x_lo}, {r.x_hi})"
            lines.append(f"root {r.index}: {where}  mult {r.multiplicity}  jump {j:+d}")
            lines.append(f"plateau {r.index + 1}: sigma = {v}  (sample {p})")
        lines.append(f"sigma at -1: {self.sigma_at_minus_one}"
                     f"  (order of Delta at -1: {self.order_at_minus_one})")
        return "\n".join(lines)


def signature_profile(a) -> SignatureProfile:
    delta = linalg.alexander_poly(_rows(a))
    if delta.is_zero():
        raise ValueError("Alexander polynomial is identically zero")
    iso, roots, points = _separate(delta)
    plateaus = tuple(omega_signature(a, p) for p in points)
    jumps = []
    for left, right in zip(plateaus, plateaus[1:]):
        if (right - left) % 2:
            raise ArithmeticError(f"plateaus {left} and {right} differ by an odd amount")
        jumps.append((right - left) // 2)
    return SignatureProfile(
        roots=tuple(ProfileRoot(r.lo, r.hi, r.multiplicity, k, r.factor) for k, r in enumerate(roots)),
        points=tuple(points),
        plateau_values=plateaus,
        jumps=tuple(jumps),
        sigma_at_minus_one=omega_signature(a, MINUS_ONE),
        order_at_one=iso.at_one,
        order_at_minus_one=iso.at_minus_one,
    )


# --------------------------------------------------------------------------
# checks


class TheoremACheck(NamedTuple):
    passed: bool
    vacuous: bool
    sigma: int
    circle_roots: int


def verify_theorem_A(a) -> TheoremACheck:
    """|sigma| is at most the number of unit-circle zeros of Delta."""
    rows = _rows(a)
    delta = linalg.alexander_poly(rows)
    sigma = omega_signature(rows, MINUS_ONE)
    if delta.is_zero():
        return TheoremACheck(True, True, sigma, 0)
    count = circle_root_count(delta)
    return TheoremACheck(abs(sigma) <= count, False, sigma, count)


class JumpCheck(NamedTuple):
    root: ProfileRoot
    jump: int
    order: int
    passed: bool


class PropDCheck(NamedTuple):
    passed: bool
    items: tuple[JumpCheck, ...]


def verify_prop_D(a, profile: SignatureProfile | None = None) -> PropDCheck:
    """Each jump is bounded in size by the order of the corresponding zero of Delta."""
    if profile is None:
        profile = signature_profile(a)
    items = tuple(JumpCheck(r, j, r.multiplicity, abs(j) <= r.multiplicity)
                  for r, j in zip(profile.roots, profile.jumps))
    return PropDCheck(all(i.passed for i in items), items)


class NullityCheck(NamedTuple):
    factor: Poly
    order: int
    nullity: int
    passed: bool


class LemmaBCheck(NamedTuple):
    passed: bool
    product_matches: bool
    chain_ok: bool
    items: tuple[NullityCheck, ...]


def _has_circle_root(f: Poly) -> bool:
    b, c, r = circle_part(f)
    return b > 0 or c > 0 or (r.degree > 0 and open_interval_count(r, -2, 2) > 0)


def verify_lemma_B(a, factors: list[Poly] | None = None) -> LemmaBCheck:
    """Nullity at each circle root is at most its order, with the invariant factors
    of tA - A^T checked against Delta on the way."""
    rows = _rows(a)
    delta = linalg.alexander_poly(rows)
    if factors is None:
        factors = smith_normal_form(seifert_pencil(rows))
    chain_ok = all(f.divides(g) for f, g in zip(factors, factors[1:]) if f)
    product = Poly([1])
    for f in factors:
        product = product * f
    if delta.is_zero():
        return LemmaBCheck(product.is_zero() and chain_ok, product.is_zero(), chain_ok, ())
    product_matches = not product.is_zero() and product.monic() == delta.monic()
    items = []
    for b, _, nullity in root_orders(factors):
        if b.degree <= 0 or not _has_circle_root(b):
            continue
        order = multiplicity(b, delta)
        items.append(NullityCheck(b, order, nullity, nullity <= order))
    passed = product_matches and chain_ok and all(i.passed for i in items)
    return LemmaBCheck(passed, product_matches, chain_ok, tuple(items))


def _factor_vanishes_in(b: Poly, root: ProfileRoot) -> bool:
    _, _, r = circle_part(b)
    if r.degree <= 0:
        return False
    if root.x_lo == root.x_hi:
        return r(root.x_lo) == 0
    return open_interval_count(r, root.x_lo, root.x_hi) > 0


class JumpNullityCheck(NamedTuple):
    passed: bool
    items: tuple[tuple[int, int, int], ...]


def verify_jump_nullity(a, profile: SignatureProfile | None = None,
                        factors: list[Poly] | None = None) -> JumpNullityCheck:
    """|jump| at a root is at most the nullity of w0 A - A^T there.

    items are (root index, jump, nullity).
    """
    rows = _rows(a)
    if profile is None:
        profile = signature_profile(rows)
    if factors is None:
        factors = smith_normal_form(seifert_pencil(rows))
    basis = [(b, nullity) for b, _, nullity in root_orders(factors) if b.degree > 0]
    items = []
    for root, jump in zip(profile.roots, profile.jumps):
        owners = [nullity for b, nullity in basis if _factor_vanishes_in(b, root)]
        if len(owners) != 1:
            raise ArithmeticError(f"root {root.index} matched {len(owners)} basis factors")
        items.append((root.index, jump, owners[0]))
    return JumpNullityCheck(all(abs(j) <= n for _, j, n in items), tuple(items))
