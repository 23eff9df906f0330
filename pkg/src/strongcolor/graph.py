"""Simple undirected graphs with stable edge ids, and the square of the line graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when a graph cannot be built or an operation gets bad input."""


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edge ids are dense (``0..m-1``) and follow the order in which the pairs
    were given. ``adj[v]`` lists ``(neighbor, edge_id)`` tuples.
    """

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        index: dict[tuple[int, int], int] = {}
        for eid, (u, v) in enumerate(edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
            index[(u, v) if u < v else (v, u)] = eid
        self.n = n
        self.edges = tuple(edges)
        self.adj = tuple(tuple(a) for a in adj)
        self._index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adj[v]]

    def incident(self, v: int) -> list[int]:
        return [e for _, e in self.adj[v]]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise GraphError(f"no edge ({u}, {v})") from None

    def edge_set(self) -> frozenset[frozenset[int]]:
        """Edges as unordered pairs; compares graphs independent of edge order."""
        return frozenset(frozenset(e) for e in self.edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for w, _ in self.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled densely; returns it with the old labels."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        pairs = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(old), pairs), old


@dataclass(frozen=True)
class StrongColoring:
    """Color per edge id, colors in ``0..k-1``."""

    colors: tuple[int, ...]
    k: int = field(default=-1)

    def __post_init__(self):
        if self.k < 0:
            object.__setattr__(self, "k", max(self.colors, default=-1) + 1)
        if self.colors and max(self.colors) >= self.k:
            raise GraphError(f"color {max(self.colors)} not below k={self.k}")
        if any(c < 0 for c in self.colors):
            raise GraphError("negative color")

    @classmethod
    def from_list(cls, colors: Sequence[int], k: int | None = None) -> "StrongColoring":
        return cls(tuple(colors), -1 if k is None else k)

    def used(self) -> int:
        """Number of distinct colors actually present."""
        return len(set(self.colors))

    def normalized(self) -> "StrongColoring":
        """Relabel colors densely in order of first appearance."""
        remap: dict[int, int] = {}
        out = [remap.setdefault(c, len(remap)) for c in self.colors]
        return StrongColoring(tuple(out), len(remap))


def build_graph(n: int, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    """Validate ``edge_pairs`` and build a :class:`Graph`.

    Raises :class:`GraphError` naming the offending pair on loops, duplicates
    or out-of-range endpoints.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    pairs = []
    for pair in edge_pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a loop")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"edge ({u}, {v}) is a duplicate")
        seen.add(key)
        pairs.append((u, v))
    return Graph(n, pairs)


def _check_edge(G: Graph, e: int) -> None:
    if not 0 <= e < G.m:
        raise GraphError(f"invalid edge id {e}")


def edges_within_distance_one(G: Graph, e: int, f: int) -> bool:
    """True iff edges ``e`` and ``f`` share an endpoint or some edge joins them.

    Runs in O(d(a) + d(b)) for ``e = (a, b)``.
    """
    _check_edge(G, e)
    _check_edge(G, f)
    if e == f:
        raise GraphError("edges must be distinct")
    a, b = G.edges[e]
    c, d = G.edges[f]
    if a == c or a == d or b == c or b == d:
        return True
    for x in (a, b):
        for w, _ in G.adj[x]:
            if w == c or w == d:
                return True
    return False


def conflict_sets(G: Graph) -> list[set[int]]:
    """For each edge, the other edges within distance one (its L(G)^2 neighbors)."""
    out: list[set[int]] = []
    for e, (u, v) in enumerate(G.edges):
        s: set[int] = set()
        for x in (u, v):
            for w, _ in G.adj[x]:
                s.update(f for _, f in G.adj[w])
        s.discard(e)
        out.append(s)
    return out


def line_graph_square(G: Graph) -> Graph:
    """L(G)^2: one vertex per edge of ``G``, adjacent iff within distance one."""
    if G.m == 0:
        raise GraphError("line graph square of an edgeless graph")
    pairs = []
    for e, nb in enumerate(conflict_sets(G)):
        pairs.extend((e, f) for f in sorted(nb) if f > e)
    return Graph(G.m, pairs)


def mcs_order(G: Graph) -> list[int]:
    """Maximum-cardinality search visiting order (bucket queue, O(n + m))."""
    n = G.n
    weight = [0] * n
    buckets: list[set[int]] = [set(range(n))] + [set() for _ in range(n)]
    done = [False] * n
    order = []
    top = 0
    for _ in range(n):
        while top > 0 and not buckets[top]:
            top -= 1
        v = min(buckets[top])
        buckets[top].discard(v)
        done[v] = True
        order.append(v)
        for w, _ in G.adj[v]:
            if not done[w]:
                buckets[weight[w]].discard(w)
                weight[w] += 1
                buckets[weight[w]].add(w)
                if weight[w] > top:
                    top = weight[w]
    return order


def is_perfect_elimination_order(G: Graph, peo: Sequence[int]) -> bool:
    pos = [0] * G.n
    for i, v in enumerate(peo):
        pos[v] = i
    nbrs = [set(G.neighbors(v)) for v in range(G.n)]
    for v in peo:
        later = [w for w in nbrs[v] if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        for w in later:
            if w != parent and w not in nbrs[parent]:
                return False
    return True


def is_chordal(G: Graph) -> bool:
    """True iff ``G`` has no induced cycle of length four or more."""
    order = mcs_order(G)
    return is_perfect_elimination_order(G, order[::-1])
