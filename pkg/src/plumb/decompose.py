"""Decomposition of a tree into pieces with controlled signature loss.

Each step cuts off a subtree G0 (at least six vertices) meeting the rest of the
tree through a single vertex w, such that either the form restricted to
G0 - w is positive definite, giving sigma(G) >= sigma(G - G0) + |G0| - 2, or
G0 is one of the two special shapes (a vertex with four leaves plus its
parent; a vertex with three leaves plus a path of length two above it) for
which sigma(G) = sigma(G - G0) + 4 exactly. Components with at most five
vertices and paths are left alone and their signature is computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from plumb import linalg
from plumb.trees import Forest, Tree, bfs_order, induced_components, induced_tree

# cases whose signature change comes from a hyperbolic splitting, not positivity
SPLITTING_CASES = (3, 5)


@dataclass(frozen=True)
class DecompositionStep:
    case_id: int
    removed_subtree: Tree
    removed_vertices: tuple[int, ...]
    attach: int
    pivot_vertices: dict
    k: int
    n: int

    @property
    def increment(self) -> int:
        return self.removed_subtree.vertex_count - 2


@dataclass(frozen=True)
class Certificate:
    steps: tuple[DecompositionStep, ...]
    residual: Forest
    residual_vertices: tuple[tuple[int, ...], ...]
    residual_signature: int
    unresolved: tuple[tuple[int, ...], ...]

    @property
    def certified_lower_bound(self) -> int:
        return self.residual_signature + sum(s.increment for s in self.steps)

    def meets_two_thirds(self, b1: int) -> bool:
        return Fraction(self.certified_lower_bound) >= Fraction(2, 3) * b1


def _form(adj, vertices) -> list[list[int]]:
    idx = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    s = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for v in vertices:
        for w in adj[v]:
            if w in idx:
                s[idx[v]][idx[w]] = 1
    return s


def _positive_definite(adj, vertices) -> bool:
    if not vertices:
        return True
    return linalg.inertia(_form(adj, vertices)).positive == len(vertices)


def _is_terminal(adj, comp: list[int]) -> bool:
    if len(comp) <= 5:
        return True
    cs = set(comp)
    return all(sum(1 for w in adj[v] if w in cs) <= 2 for v in comp)


class _Rooted:
    """A component oriented away from a chosen leaf."""

    def __init__(self, adj, comp: set[int], root: int):
        self.comp = comp
        self.root = root
        self.deg = {v: sum(1 for w in adj[v] if w in comp) for v in comp}
        sub = [[w for w in adj[v] if w in comp] if v in comp else [] for v in range(len(adj))]
        order, self.parent = bfs_order(sub, root)
        self.depth = {root: 0}
        for v in order[1:]:
            self.depth[v] = self.depth[self.parent[v]] + 1
        self.children = {v: [] for v in order}
        for v in order[1:]:
            self.children[self.parent[v]].append(v)
        self.desc = {}
        self.branchy_below = {}
        for v in reversed(order):
            self.desc[v] = sum(self.desc[c] + 1 for c in self.children[v])
            self.branchy_below[v] = any(self.deg[c] >= 3 or self.branchy_below[c]
                                        for c in self.children[v])

    def subtree(self, v: int) -> list[int]:
        out = [v]
        for u in out:
            out.extend(self.children[u])
        return out

    def outermost(self) -> list[int]:
        cands = [v for v in self.comp if self.deg[v] >= 3 and not self.branchy_below[v]]
        return sorted(cands, key=lambda v: (-self.depth[v], v))


def _root_order(adj, comp: list[int]) -> list[int]:
    cs = set(comp)
    leaves = [v for v in comp if sum(1 for w in adj[v] if w in cs) == 1]
    scored = []
    for r in leaves:
        rt = _Rooted(adj, cs, r)
        deepest = max((rt.depth[v] for v in rt.outermost()), default=-1)
        scored.append((-deepest, r))
    return [r for _, r in sorted(scored)]


def _match_1_to_6(rt: _Rooted, v: int):
    k = rt.desc[v]
    n = len(rt.children[v])
    p1 = rt.parent[v]
    base = rt.subtree(v)
    piv = {"v": v, "v'": p1}
    if k >= 5:
        return 1, base, v, piv, k, n
    if k == 4:
        return (2 if n <= 3 else 3), base + [p1], p1, piv, k, n
    if rt.deg[p1] == 2:
        p2 = rt.parent[p1]
        piv["v''"] = p2
        if k == 3:
            return (4 if n == 2 else 5), base + [p1, p2], p2, piv, k, n
        if k == 2 and rt.deg[p2] == 2:
            p3 = rt.parent[p2]
            piv["v'''"] = p3
            return 6, base + [p1, p2, p3], p3, piv, k, n
    return None


def _match_7(rt: _Rooted, v: int):
    k = rt.desc[v]
    n = len(rt.children[v])
    p1 = rt.parent[v]
    piv = {"v": v, "v'": p1}
    if rt.desc[p1] >= 5:
        return 7, rt.subtree(p1), p1, piv, k, n
    p2 = rt.parent[p1]
    if p2 < 0:
        return None
    piv["v''"] = p2
    return 7, rt.subtree(p2), p2, piv, k, n


def _valid(adj, found) -> bool:
    case, verts, w, *_ = found
    if len(verts) < 6:
        return False
    if case in SPLITTING_CASES:
        return True
    return _positive_definite(adj, [x for x in verts if x != w])


def _find_step(adj, comp: list[int]):
    roots = _root_order(adj, comp)
    cs = set(comp)
    rooted = [_Rooted(adj, cs, r) for r in roots]
    for matcher in (_match_1_to_6, _match_7):
        for rt in rooted:
            for v in rt.outermost():
                found = matcher(rt, v)
                if found is not None and _valid(adj, found):
                    return found
    return None


def lemma1_decompose(t: Tree) -> Certificate:
    """Certificate that sigma(t) is at least the returned lower bound."""
    adj = t.adjacency
    work = [list(range(t.vertex_count))]
    steps = []
    terminal: list[list[int]] = []
    unresolved: list[list[int]] = []
    while work:
        work.sort(key=lambda c: c[0])
        comp = work.pop(0)
        if _is_terminal(adj, comp):
            terminal.append(comp)
            continue
        found = _find_step(adj, comp)
        if found is None:
            unresolved.append(comp)
            terminal.append(comp)
            continue
        case, verts, w, piv, k, n = found
        steps.append(DecompositionStep(
            case_id=case,
            removed_subtree=induced_tree(adj, verts),
            removed_vertices=tuple(verts),
            attach=w,
            pivot_vertices=piv,
            k=k,
            n=n,
        ))
        removed = set(verts)
        work.extend(induced_components(adj, [x for x in comp if x not in removed]))
    terminal.sort(key=lambda c: c[0])
    residual = Forest(tuple(induced_tree(adj, c) for c in terminal))
    sigma = 0
    for c in terminal:
        sigma += linalg.inertia(_form(adj, c)).signature
    return Certificate(
        steps=tuple(steps),
        residual=residual,
        residual_vertices=tuple(tuple(c) for c in terminal),
        residual_signature=sigma,
        unresolved=tuple(tuple(c) for c in unresolved),
    )


def verify_certificate(t: Tree, cert: Certificate) -> bool:
    """Replay the steps on t and re-check every claim exactly.

    For each cut: G0 lies in the current forest, is connected, has at least
    six vertices, meets the rest only through its attach vertex, and
    sigma(current) >= sigma(current - G0) + |G0| - 2 holds (with equality
    plus 4 for the splitting cases). The remaining components must be
    terminal and their signature must match the recorded one.
    """
    adj = t.adjacency
    present = set(range(t.vertex_count))

    def sig(vs):
        vs = sorted(vs)
        return linalg.inertia(_form(adj, vs)).signature if vs else 0

    for step in cert.steps:
        verts = set(step.removed_vertices)
        if len(verts) < 6 or not verts <= present or step.attach not in verts:
            return False
        if len(induced_components(adj, verts)) != 1:
            return False
        for x in verts - {step.attach}:
            if any(w in present and w not in verts for w in adj[x]):
                return False
        before, after = sig(present), sig(present - verts)
        if step.case_id in SPLITTING_CASES:
            if before != after + 4:
                return False
        elif before < after + step.increment:
            return False
        present -= verts
    comps = induced_components(adj, present)
    if sorted(tuple(c) for c in comps) != sorted(cert.residual_vertices):
        return False
    if any(not _is_terminal(adj, c) for c in comps) and not cert.unresolved:
        return False
    return sig(present) == cert.residual_signature


def case5_tree() -> tuple[Tree, int]:
    """The six-vertex tree of the optimal family and the vertex v'' used for gluing.

    A vertex with three leaves whose fourth neighbour starts a path of length two.
    """
    # 0 = v, 1..3 leaves, 4 = v', 5 = v''
    t = Tree(6, ((0, 1), (0, 2), (0, 3), (0, 4), (4, 5)))
    return t, 5
