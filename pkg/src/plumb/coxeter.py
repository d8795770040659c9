"""Reflection representation of the Coxeter system of a forest.

Convention: matrices act on column vectors in the basis s_1..s_n, and the
Coxeter transformation for an order (o_1, ..., o_n) is the matrix product
R_{o_1} R_{o_2} ... R_{o_n}, so R_{o_n} is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from plumb import linalg, polynomials
from plumb.forms import coxeter_form, seifert_matrix
from plumb.polynomials import Poly
from plumb.trees import Forest, Tree, as_forest


@dataclass(frozen=True, eq=False)
class CoxeterMatrix:
    entries: np.ndarray
    order_used: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    def char_poly(self) -> Poly:
        return linalg.char_poly(self.entries.tolist())


class SpectrumClassification(NamedTuple):
    circle_count: int
    positive_real_count: int
    other_count: int


def reflection_matrix(f: Tree | Forest, i: int) -> np.ndarray:
    """R_i(s_j) = s_j + q(s_i, s_j) s_i, as a matrix acting on columns."""
    q = coxeter_form(f).entries
    n = q.shape[0]
    if not 0 <= i < n:
        raise IndexError(f"vertex {i} out of range for {n} vertices")
    r = np.eye(n, dtype=np.int64)
    r[i, :] += q[i, :]
    r.setflags(write=False)
    return r


def coxeter_transformation(f: Tree | Forest, order: Sequence[int] | None = None) -> CoxeterMatrix:
    forest = as_forest(f)
    n = forest.vertex_count
    if order is None:
        order = range(n)
    order = tuple(int(i) for i in order)
    if sorted(order) != list(range(n)):
        raise ValueError(f"{order} is not a permutation of the {n} vertices")
    c = np.eye(n, dtype=np.int64)
    for i in order:
        c = c @ reflection_matrix(forest, i)
    c.setflags(write=False)
    return CoxeterMatrix(c, order)


def two_coloring(f: Tree | Forest) -> list[int]:
    """Proper 2-coloring; the smallest vertex of each component gets color 0."""
    forest = as_forest(f)
    adj = forest.adjacency
    color = [-1] * forest.vertex_count
    for s in range(forest.vertex_count):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
    return color


def bicolored_order(f: Tree | Forest) -> tuple[int, ...]:
    color = two_coloring(f)
    first = [v for v, c in enumerate(color) if c == 0]
    second = [v for v, c in enumerate(color) if c == 1]
    return tuple(first + second)


def bicolored_coxeter(f: Tree | Forest) -> CoxeterMatrix:
    return coxeter_transformation(f, bicolored_order(f))


def classify_spectrum(c: CoxeterMatrix | np.ndarray, poly: Poly | None = None) -> SpectrumClassification:
    """Count eigenvalues on the unit circle, on (0, oo) minus the point 1, and elsewhere.

    An eigenvalue 1 lies on the circle and is counted there only, so the
    three counts add up to the dimension.
    """
    if poly is None:
        m = c.entries if isinstance(c, CoxeterMatrix) else np.asarray(c)
        poly = linalg.char_poly(m.tolist())
    sqf = polynomials.squarefree_decomposition(poly)
    circle = polynomials.circle_root_count(poly, sqf)
    at_one, _ = polynomials.strip_linear(poly, 1)
    positive = polynomials.positive_real_root_count(poly, sqf) - at_one
    return SpectrumClassification(circle, positive, poly.degree - circle - positive)


def monodromy_correspondence_check(t: Tree) -> bool:
    """char poly of the bicolored Coxeter transformation at -t equals +-t^k Delta(t)."""
    cox = bicolored_coxeter(t).char_poly()
    delta = linalg.alexander_poly(seifert_matrix(t).tolist())
    return polynomials.equal_up_to_unit(cox.substitute_neg(), delta)


def preserves_form(f: Tree | Forest, i: int) -> bool:
    q = coxeter_form(f).entries
    r = reflection_matrix(f, i)
    return np.array_equal(r.T @ q @ r, q)
