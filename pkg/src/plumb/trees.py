"""Finite trees and forests: validation, canonical codes, enumeration and the
small graph surgeries (subdivision, slalom transform, gluing)."""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class TreeError(ValueError):
    pass


@dataclass(frozen=True)
class Tree:
    """An unrooted tree on vertices 0..vertex_count-1, optionally rooted."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()
    root: int | None = None

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise TreeError("a tree needs at least one vertex")
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise TreeError(f"self-loop at {u}")
            norm.append((min(u, v), max(u, v)))
        if len(set(norm)) != len(norm):
            raise TreeError("duplicate edge")
        if len(norm) < n - 1:
            raise TreeError(f"disconnected: {n} vertices but only {len(norm)} edges")
        if len(norm) > n - 1:
            raise TreeError(f"cycle detected: {n} vertices but {len(norm)} edges")
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if self.root is not None and not 0 <= self.root < n:
            raise TreeError(f"root {self.root} out of range")
        seen = _reach(self.adjacency, 0)
        if len(seen) != n:
            # n - 1 edges and disconnected means a cycle somewhere
            raise TreeError("edges contain a cycle (graph is disconnected)")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def b1(self) -> int:
        return self.vertex_count

    def is_path(self) -> bool:
        return all(len(a) <= 2 for a in self.adjacency)

    def with_root(self, root: int | None) -> Tree:
        return Tree(self.vertex_count, self.edges, root)

    def relabel(self, perm: Sequence[int]) -> Tree:
        """Vertex v becomes perm[v]."""
        root = None if self.root is None else perm[self.root]
        return Tree(self.vertex_count, tuple((perm[u], perm[v]) for u, v in self.edges), root)

    def __str__(self):
        return format_tree(self)


def _reach(adj, start: int) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        u = todo.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


@dataclass(frozen=True)
class Forest:
    """Disjoint union of trees; component i occupies a contiguous index block."""

    components: tuple[Tree, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def vertex_count(self) -> int:
        return sum(t.vertex_count for t in self.components)

    @property
    def offsets(self) -> list[int]:
        out, acc = [], 0
        for t in self.components:
            out.append(acc)
            acc += t.vertex_count
        return out

    @property
    def edges(self) -> list[tuple[int, int]]:
        out = []
        for off, t in zip(self.offsets, self.components):
            out.extend((u + off, v + off) for u, v in t.edges)
        return out

    @property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return [sorted(a) for a in adj]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Forest:
        """Split a forest given as a global edge list into its trees (ordered by smallest vertex)."""
        edges = list(edges)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        seen: set[int] = set()
        comps = []
        for s in range(n):
            if s in seen:
                continue
            part = sorted(_reach(adj, s))
            seen.update(part)
            idx = {v: i for i, v in enumerate(part)}
            local = [(idx[u], idx[v]) for u, v in edges if u in idx]
            comps.append(Tree(len(part), tuple(local)))
        return cls(tuple(comps))


def as_forest(f: Tree | Forest) -> Forest:
    return f if isinstance(f, Forest) else Forest((f,))


# --------------------------------------------------------------------------
# small constructors


def path_tree(n: int) -> Tree:
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star_tree(leaves: int) -> Tree:
    return Tree(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def spider(legs: Sequence[int]) -> Tree:
    """Center 0 with paths of the given lengths attached."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, tuple(edges))


def tree_from_prufer(seq: Sequence[int]) -> Tree:
    """Decode a Pruefer sequence of length n - 2 into a labelled tree on n vertices."""
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        if not 0 <= v < n:
            raise TreeError(f"Pruefer entry {v} out of range for {n} vertices")
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return Tree(n, tuple(edges))


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniformly random labelled tree on n vertices."""
    if n <= 2:
        return path_tree(n)
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)])


# --------------------------------------------------------------------------
# text format


def parse_tree(text: str) -> Tree:
    """Parse the tree file format: vertex count, optional ``root k``, then edges ``u v``."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise TreeError("empty tree file")
    try:
        n = int(lines[0])
    except ValueError:
        raise TreeError(f"malformed vertex count line: {lines[0]!r}") from None
    root = None
    body = lines[1:]
    if body and body[0].split()[0] == "root":
        parts = body[0].split()
        if len(parts) != 2:
            raise TreeError(f"malformed root line: {body[0]!r}")
        try:
            root = int(parts[1])
        except ValueError:
            raise TreeError(f"malformed root line: {body[0]!r}") from None
        body = body[1:]
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise TreeError(f"malformed edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise TreeError(f"malformed edge line: {ln!r}") from None
        edges.append((u, v))
    return Tree(n, tuple(edges), root)


def format_tree(t: Tree) -> str:
    lines = [str(t.vertex_count)]
    if t.root is not None:
        lines.append(f"root {t.root}")
    lines.extend(f"{u} {v}" for u, v in t.edges)
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# canonical codes


def centers(t: Tree) -> list[int]:
    """The one or two central vertices, found by peeling leaves."""
    n = t.vertex_count
    if n <= 2:
        return list(range(n))
    deg = [t.degree(v) for v in range(n)]
    layer = [v for v in range(n) if deg[v] == 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adjacency[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def rooted_code(adj, root: int, allowed: set[int] | None = None) -> str:
    """AHU code of the subtree hanging at ``root`` (iterative, any size)."""
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in adj[u]:
            if w != parent[u] and (allowed is None or w in allowed):
                parent[w] = u
                order.append(w)
    codes: dict[int, list[str]] = {v: [] for v in order}
    out = ""
    for v in reversed(order):
        out = "(" + "".join(sorted(codes[v])) + ")"
        if parent[v] != -1:
            codes[parent[v]].append(out)
    return out


def canonical_code(t: Tree) -> str:
    """Isomorphism-class code of t as an unrooted tree (root ignored)."""
    return min(rooted_code(t.adjacency, c) for c in centers(t))


def planted_code(t: Tree) -> str:
    """Rooted-isomorphism code; requires a root."""
    if t.root is None:
        raise TreeError("planted_code needs a rooted tree")
    return rooted_code(t.adjacency, t.root)


def tree_from_code(code: str, rooted: bool = False) -> Tree:
    """Rebuild a tree from an AHU code; vertices numbered in preorder, root 0."""
    edges = []
    stack: list[int] = []
    nxt = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        elif ch == ")":
            stack.pop()
        else:
            raise TreeError(f"bad character {ch!r} in code")
    if stack or nxt == 0:
        raise TreeError("unbalanced code")
    return Tree(nxt, tuple(edges), 0 if rooted else None)


# --------------------------------------------------------------------------
# enumeration


def _add_leaf(t: Tree, v: int) -> Tree:
    return Tree(t.vertex_count + 1, t.edges + ((v, t.vertex_count),))


def free_tree_levels(max_n: int) -> Iterator[list[Tree]]:
    """Yield, for n = 1..max_n, the sorted list of canonical n-vertex trees."""
    if max_n < 1:
        return
    level = {canonical_code(Tree(1)): Tree(1)}
    for n in range(1, max_n + 1):
        yield [tree_from_code(c) for c in sorted(level)]
        if n == max_n:
            break
        nxt: dict[str, Tree] = {}
        for t in level.values():
            done = set()
            for v in range(t.vertex_count):
                # one leaf per vertex type suffices
                kind = rooted_code(t.adjacency, v)
                if kind in done:
                    continue
                done.add(kind)
                bigger = _add_leaf(t, v)
                nxt.setdefault(canonical_code(bigger), bigger)
        level = nxt


def enumerate_free_trees(n: int) -> Iterator[Tree]:
    """One tree per isomorphism class of n-vertex trees, ordered by canonical code."""
    if n < 1:
        return iter(())
    *_, last = free_tree_levels(n)
    return iter(last)


def _rooted_levels(max_m: int) -> Iterator[list[str]]:
    level = {"()"}
    for m in range(1, max_m + 1):
        yield sorted(level)
        if m == max_m:
            break
        nxt = set()
        for code in level:
            t = tree_from_code(code, rooted=True)
            for v in range(t.vertex_count):
                bigger = _add_leaf(t, v)
                nxt.add(rooted_code(bigger.adjacency, 0))
        level = nxt


def enumerate_planted_trees(n: int) -> Iterator[Tree]:
    """Rooted n-vertex trees whose root has degree one, one per rooted isomorphism class."""
    if n < 2:
        return iter(())
    *_, codes = _rooted_levels(n - 1)
    # the new root sits above the old one
    return iter(tree_from_code("(" + c + ")", rooted=True) for c in codes)


def forest_levels(max_n: int) -> Iterator[list[Forest]]:
    """For n = 1..max_n, every n-vertex forest up to isomorphism.

    Components are listed largest first (ties by canonical code).
    """
    trees = [t for lvl in free_tree_levels(max_n) for t in lvl]
    # trees[i] in ascending size; a forest is a non-increasing index sequence
    sizes = [t.vertex_count for t in trees]
    by_total: list[list[tuple[int, ...]]] = [[] for _ in range(max_n + 1)]

    def extend(prefix: tuple[int, ...], total: int, top: int):
        by_total[total].append(prefix)
        for i in range(top, -1, -1):
            if total + sizes[i] <= max_n:
                extend(prefix + (i,), total + sizes[i], i)

    extend((), 0, len(trees) - 1)
    for n in range(1, max_n + 1):
        yield [Forest(tuple(trees[i] for i in seq)) for seq in by_total[n]]


# --------------------------------------------------------------------------
# surgery


def subdivide(t: Tree) -> Tree:
    """Insert a new vertex in the middle of every edge."""
    n = t.vertex_count
    edges = []
    for i, (u, v) in enumerate(t.edges):
        m = n + i
        edges.extend([(u, m), (m, v)])
    return Tree(n + len(t.edges), tuple(edges), t.root)


def slalom_transform(t: Tree) -> Tree:
    """Subdivide, then delete the root together with its single edge."""
    if t.root is None:
        raise TreeError("slalom transform needs a rooted tree")
    if t.degree(t.root) != 1:
        raise TreeError(f"root has degree {t.degree(t.root)}, expected 1")
    s = subdivide(t)
    r = t.root
    keep = [v for v in range(s.vertex_count) if v != r]
    idx = {v: i for i, v in enumerate(keep)}
    edges = tuple((idx[u], idx[v]) for u, v in s.edges if r not in (u, v))
    return Tree(len(keep), edges)


def glue(base: Tree, at: int, attachment: Tree, at2: int) -> Tree:
    """Disjoint union plus the edge {at, at2}; attachment vertices are shifted."""
    if not 0 <= at < base.vertex_count:
        raise TreeError(f"vertex {at} out of range for base")
    if not 0 <= at2 < attachment.vertex_count:
        raise TreeError(f"vertex {at2} out of range for attachment")
    off = base.vertex_count
    edges = base.edges + tuple((u + off, v + off) for u, v in attachment.edges)
    return Tree(off + attachment.vertex_count, edges + ((at, at2 + off),), base.root)


def induced_components(adj, vertices: Iterable[int]) -> list[list[int]]:
    """Connected components (sorted vertex lists) of the subgraph induced on ``vertices``."""
    vs = set(vertices)
    out = []
    for s in sorted(vs):
        if any(s in c for c in out):
            continue
        comp = {s}
        todo = [s]
        while todo:
            u = todo.pop()
            for w in adj[u]:
                if w in vs and w not in comp:
                    comp.add(w)
                    todo.append(w)
        out.append(sorted(comp))
    return out


def induced_tree(adj, vertices: Sequence[int]) -> Tree:
    """The tree induced on a connected vertex list, relabeled in list order."""
    idx = {v: i for i, v in enumerate(vertices)}
    edges = [(idx[u], idx[w]) for u in vertices for w in adj[u] if w in idx and idx[u] < idx[w]]
    return Tree(len(vertices), tuple(edges))


def bfs_order(adj, root: int) -> tuple[list[int], dict[int, int]]:
    parent = {root: -1}
    order = [root]
    q = deque([root])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
                q.append(w)
    return order, parent
