"""Matrices attached to trees, divides and plumbing operations.

Symmetric forms are immutable integer numpy arrays; the exact algorithms in
``plumb.linalg`` consume them through ``tolist()``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from plumb import linalg
from plumb.trees import Forest, Tree, as_forest, bfs_order


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 0)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SymmetricForm:
    entries: np.ndarray

    def __post_init__(self):
        arr = _frozen(self.entries)
        if not np.array_equal(arr, arr.T):
            raise ValueError("form is not symmetric")
        object.__setattr__(self, "entries", arr)

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other):
        if isinstance(other, SymmetricForm):
            return np.array_equal(self.entries, other.entries)
        return NotImplemented

    def inertia(self) -> linalg.Inertia:
        return linalg.inertia(self.entries.tolist())

    @property
    def signature(self) -> int:
        return self.inertia().signature

    def determinant(self) -> int:
        return int(linalg.determinant(self.entries.tolist()))

    def principal_minor(self, indices: Sequence[int]) -> SymmetricForm:
        idx = list(indices)
        return SymmetricForm(self.entries[np.ix_(idx, idx)])

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


@dataclass(frozen=True, eq=False)
class SeifertMatrix:
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen(self.entries))

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other):
        if isinstance(other, SeifertMatrix):
            return np.array_equal(self.entries, other.entries)
        return NotImplemented

    def symmetrized(self) -> SymmetricForm:
        return SymmetricForm(self.entries + self.entries.T)

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


def symmetrized_form(f: Tree | Forest) -> SymmetricForm:
    """Diagonal 2, entry 1 exactly on edges; block diagonal over components."""
    forest = as_forest(f)
    n = forest.vertex_count
    s = 2 * np.eye(n, dtype=np.int64)
    for u, v in forest.edges:
        s[u, v] = s[v, u] = 1
    return SymmetricForm(s)


def coxeter_form(f: Tree | Forest) -> SymmetricForm:
    """q(s_i, s_i) = -2 and q(s_i, s_j) = 1 on edges."""
    forest = as_forest(f)
    n = forest.vertex_count
    q = -2 * np.eye(n, dtype=np.int64)
    for u, v in forest.edges:
        q[u, v] = q[v, u] = 1
    return SymmetricForm(q)


def seifert_matrix(t: Tree | Forest) -> SeifertMatrix:
    """Asymmetric lift of the tree form: unit diagonal, A[parent][child] = 1.

    Edges are oriented away from vertex 0 of each component.
    """
    forest = as_forest(t)
    n = forest.vertex_count
    a = np.eye(n, dtype=np.int64)
    adj = forest.adjacency
    for off in forest.offsets:
        _, parent = bfs_order(adj, off)
        for child, par in parent.items():
            if par >= 0:
                a[par, child] = 1
    return SeifertMatrix(a)


def upper_lift(s: SymmetricForm) -> SeifertMatrix:
    """Lift S with even diagonal to the upper triangular A with A + A^T = S."""
    e = s.entries
    if np.any(np.diag(e) % 2):
        raise ValueError("upper_lift needs an even diagonal")
    a = np.triu(e, 1) + np.diag(np.diag(e) // 2)
    return SeifertMatrix(a)


# --------------------------------------------------------------------------
# the spiral divide family


def spiral_blocks(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if n <= 0:
        raise ValueError("spiral family needs n >= 1")
    a = 2 * np.eye(n, dtype=np.int64)
    b = np.eye(n, dtype=np.int64) + 2 * np.eye(n, k=1, dtype=np.int64) + np.eye(n, k=2, dtype=np.int64)
    d = 2 * np.eye(n, dtype=np.int64)
    for i in range(n - 1):
        d[i, i + 1] = d[i + 1, i] = 1 if i == 0 else 2
    for m in (a, b, d):
        m.setflags(write=False)
    return a, b, d


def spiral_form(n: int) -> SymmetricForm:
    a, b, d = spiral_blocks(n)
    return SymmetricForm(np.block([[a, b], [b.T, d]]))


def spiral_reduction(n: int) -> np.ndarray:
    """B^T B - A D; its determinant controls the sign of det(S_2n)."""
    a, b, d = spiral_blocks(n)
    return b.T @ b - a @ d


# --------------------------------------------------------------------------
# divides


@dataclass(frozen=True)
class DivideCombinatorics:
    """Adjacency multiplicities of a divide: double points first, then inner faces."""

    double_points: int
    inner_faces: int
    face_face: dict = field(default_factory=dict)
    dp_face: dict = field(default_factory=dict)

    def __post_init__(self):
        d, f = self.double_points, self.inner_faces
        if d < 0 or f < 0:
            raise ValueError("counts must be non-negative")
        ff = {}
        for (i, j), m in dict(self.face_face).items():
            if not (0 <= i < f and 0 <= j < f):
                raise ValueError(f"face pair ({i}, {j}) out of range")
            if i == j:
                raise ValueError("a face is not adjacent to itself")
            if m < 0:
                raise ValueError("negative multiplicity")
            ff[(min(i, j), max(i, j))] = int(m)
        df = {}
        for (k, j), m in dict(self.dp_face).items():
            if not (0 <= k < d and 0 <= j < f):
                raise ValueError(f"double point / face pair ({k}, {j}) out of range")
            if m < 0:
                raise ValueError("negative multiplicity")
            df[(k, j)] = int(m)
        object.__setattr__(self, "face_face", ff)
        object.__setattr__(self, "dp_face", df)


def divide_form(dc: DivideCombinatorics) -> SymmetricForm:
    d = dc.double_points
    n = d + dc.inner_faces
    s = 2 * np.eye(n, dtype=np.int64)
    for (i, j), m in dc.face_face.items():
        s[d + i, d + j] = s[d + j, d + i] = m
    for (k, j), m in dc.dp_face.items():
        s[k, d + j] = s[d + j, k] = m
    return SymmetricForm(s)


def face_with_double_points(count: int) -> SymmetricForm:
    """One inner face 1-fold adjacent to ``count`` double points (face listed first)."""
    dc = DivideCombinatorics(count, 1, dp_face={(k, 0): 1 for k in range(count)})
    s = divide_form(dc).entries
    order = [count] + list(range(count))
    return SymmetricForm(s[np.ix_(order, order)])


# --------------------------------------------------------------------------
# plumbing as bordering


def plumb_band(s: SymmetricForm, coupling: Sequence[int], self_pairing: int = 2) -> SymmetricForm:
    """Border S by one new basis curve."""
    c = np.asarray(coupling, dtype=np.int64).reshape(-1)
    d = s.dimension
    if c.shape[0] != d:
        raise ValueError(f"coupling has length {c.shape[0]}, expected {d}")
    out = np.zeros((d + 1, d + 1), dtype=np.int64)
    out[:d, :d] = s.entries
    out[d, :d] = out[:d, d] = c
    out[d, d] = self_pairing
    return SymmetricForm(out)


def plumb_trefoil(s: SymmetricForm, coupling: Sequence[int]) -> SymmetricForm:
    """Border S by a trefoil block [[2,1],[1,2]] whose second curve misses S."""
    first = plumb_band(s, coupling)
    return plumb_band(first, [0] * s.dimension + [1])


def example1_form() -> SymmetricForm:
    return SymmetricForm([[2, 1, 3, 2],
                          [1, 2, 2, 3],
                          [3, 2, 2, 4],
                          [2, 3, 4, 2]])


def block_diagonal(*mats) -> np.ndarray:
    n = sum(np.asarray(m).shape[0] for m in mats)
    out = np.zeros((n, n), dtype=np.int64)
    i = 0
    for m in mats:
        m = np.asarray(m)
        k = m.shape[0]
        out[i:i + k, i:i + k] = m
        i += k
    return out
