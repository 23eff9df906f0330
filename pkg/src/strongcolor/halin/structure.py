"""Halin annotations: validation and the rooted plane-tree view used by both DPs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..graph import Graph, GraphError


class HalinError(GraphError):
    """An annotation does not certify a Halin decomposition.

    ``reason`` is one of ``not-a-tree``, ``degree-2-vertex``,
    ``leaf-cycle-mismatch``, ``crossing``, ``root``.
    """

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


@dataclass(frozen=True)
class HalinAnnotation:
    tree_edges: tuple[int, ...]
    cycle_order: tuple[int, ...]
    children_order: Mapping[int, tuple[int, ...]] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tree_edges", tuple(self.tree_edges))
        object.__setattr__(self, "cycle_order", tuple(self.cycle_order))


@dataclass
class RootedHalin:
    """The tree rooted at the first leaf of the cycle order.

    ``left_edge[l]`` is the cycle edge from leaf ``l`` to the previous leaf;
    ``right_edge[l]`` goes to the next one. ``lo[x]``/``hi[x]`` are the
    leftmost/rightmost leaves of the subtree at ``x``.
    """

    G: Graph
    root: int
    parent: list[int]
    parent_edge: list[int]
    children: list[list[int]]
    leaves: list[int]
    left_edge: dict[int, int]
    right_edge: dict[int, int]
    lo: list[int]
    hi: list[int]
    postorder: list[int]
    tree_edge_set: frozenset[int]

    @property
    def top(self) -> int:
        """The unique tree neighbor of the root leaf."""
        return self.children[self.root][0]

    def subtree_vertices(self, x: int) -> list[int]:
        out, stack = [], [x]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(self.children[v])
        return out

    def internal_vertices(self) -> list[int]:
        return [v for v in range(self.G.n) if v != self.root and self.children[v]]


def root_halin(G: Graph, ann: HalinAnnotation) -> RootedHalin:
    """Validate ``ann`` against ``G`` and return the rooted view.

    Raises :class:`HalinError` naming the first violated invariant.
    """
    n, m = G.n, G.m
    tree = list(ann.tree_edges)
    if len(set(tree)) != len(tree) or any(not 0 <= e < m for e in tree):
        raise HalinError("not-a-tree", "tree edge ids invalid or repeated")
    if n < 4 or len(tree) != n - 1:
        raise HalinError("not-a-tree", f"{len(tree)} tree edges for {n} vertices")
    tadj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in tree:
        u, v = G.edges[e]
        tadj[u].append((v, e))
        tadj[v].append((u, e))
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        v = stack.pop()
        for w, _ in tadj[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    if not all(seen):
        raise HalinError("not-a-tree", "tree edges do not span the graph")
    for v in range(n):
        if len(tadj[v]) == 2:
            raise HalinError("degree-2-vertex", f"vertex {v}")
    tree_leaves = {v for v in range(n) if len(tadj[v]) == 1}
    order = list(ann.cycle_order)
    if len(order) != len(set(order)) or set(order) != tree_leaves or len(order) < 3:
        raise HalinError("leaf-cycle-mismatch", "cycle order is not the leaf set of the tree")
    tree_set = frozenset(tree)
    expected = set()
    left_edge: dict[int, int] = {}
    right_edge: dict[int, int] = {}
    t = len(order)
    for i, a in enumerate(order):
        b = order[(i + 1) % t]
        if not G.has_edge(a, b):
            raise HalinError("leaf-cycle-mismatch", f"leaves {a} and {b} are not adjacent")
        e = G.edge_id(a, b)
        if e in tree_set:
            raise HalinError("leaf-cycle-mismatch", f"cycle edge {e} is a tree edge")
        expected.add(e)
        right_edge[a] = e
        left_edge[b] = e
    if expected | tree_set != set(range(m)) or len(expected) != m - len(tree):
        raise HalinError("leaf-cycle-mismatch", "tree and cycle edges do not partition E(G)")

    root = order[0]
    pos = {v: i for i, v in enumerate(order)}
    parent = [-1] * n
    parent_edge = [-1] * n
    children: list[list[int]] = [[] for _ in range(n)]
    pre = [root]
    visited = [False] * n
    visited[root] = True
    stack = [root]
    while stack:
        v = stack.pop()
        for w, e in tadj[v]:
            if not visited[w]:
                visited[w] = True
                parent[w] = v
                parent_edge[w] = e
                children[v].append(w)
                stack.append(w)
                pre.append(w)
    post = pre[::-1]
    lo = [0] * n
    hi = [0] * n
    size = [0] * n
    for v in post:
        if v != root and not children[v]:
            lo[v] = hi[v] = pos[v]
            size[v] = 1
        elif v != root:
            lo[v] = min(lo[c] for c in children[v])
            hi[v] = max(hi[c] for c in children[v])
            size[v] = sum(size[c] for c in children[v])
            if hi[v] - lo[v] + 1 != size[v]:
                raise HalinError("crossing", f"leaves below {v} are not consecutive on the cycle")
    for v in range(n):
        children[v].sort(key=lambda c: lo[c])
    if ann.children_order is not None:
        for v, given in ann.children_order.items():
            if list(given) != children[v]:
                raise HalinError("crossing", f"children order of {v} disagrees with the cycle")
    return RootedHalin(
        G=G,
        root=root,
        parent=parent,
        parent_edge=parent_edge,
        children=children,
        leaves=order,
        left_edge=left_edge,
        right_edge=right_edge,
        lo=[order[i] for i in lo],
        hi=[order[i] for i in hi],
        postorder=[v for v in post if v != root],
        tree_edge_set=tree_set,
    )


def validate_halin(G: Graph, ann: HalinAnnotation) -> None:
    """Raise :class:`HalinError` unless ``ann`` certifies ``G`` as a Halin graph."""
    root_halin(G, ann)


def tree_of(G: Graph, ann: HalinAnnotation) -> Graph:
    """The underlying tree as a graph on the same vertex set."""
    return Graph(G.n, [G.edges[e] for e in ann.tree_edges])


def boundary_edges(G: Graph, ann: HalinAnnotation | RootedHalin, x: int) -> list[int]:
    """Boundary of the subgraph induced by the subtree at ``x``.

    The parent edge of ``x``, the two cycle edges leaving the subtree's
    leaf path, and every other edge at ``x`` and at the two extreme leaves.
    At most nine edges when ``G`` is cubic.
    """
    R = ann if isinstance(ann, RootedHalin) else root_halin(G, ann)
    if x == R.root:
        raise HalinError("root", "the root leaf has no boundary")
    out: list[int] = []
    base = [R.parent_edge[x], R.left_edge[R.lo[x]], R.right_edge[R.hi[x]]]
    for e in base:
        if e not in out:
            out.append(e)
    for v in (x, R.lo[x], R.hi[x]):
        for _, e in G.adj[v]:
            if e not in out:
                out.append(e)
    return out


def halin_from_tree(
    n: int, tree_pairs: Sequence[tuple[int, int]], cycle_order: Sequence[int]
) -> tuple[Graph, HalinAnnotation]:
    """Build the Halin graph for a plane tree given by its leaf order."""
    pairs = list(tree_pairs)
    t = len(cycle_order)
    for i in range(t):
        pairs.append((cycle_order[i], cycle_order[(i + 1) % t]))
    G = Graph(n, pairs)
    return G, HalinAnnotation(tuple(range(len(tree_pairs))), tuple(cycle_order))
