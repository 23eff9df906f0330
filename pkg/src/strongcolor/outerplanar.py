"""Maximal outerplanar graphs: dual tree, extended triangles and greedy coloring.

Recognition peels ears (degree-2 vertices whose two neighbors are
adjacent) until one triangle remains. Each ear is a triangle of the
triangulation; two triangles are adjacent in the dual when they share an
edge, which is found by remembering the first triangle seen on each edge.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from math import isqrt

from .graph import Graph, GraphError, StrongColoring


class NotMOPError(GraphError):
    """``reason`` is one of ``small``, ``disconnected``, ``wrong-edge-count``,
    ``no-ear`` or ``edge-in-three-triangles``."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


class OuterplanarDual:
    """Triangles of the triangulation and the tree of shared edges between them.

    Stored flat: triangle ``t`` is ``tri[3t:3t+3]`` (sorted), dual edge ``i``
    joins ``dual[2i]`` and ``dual[2i+1]`` across graph edge ``shared[i]``.
    ``degree`` holds the vertex degrees of the graph.
    """

    __slots__ = ("tri", "dual", "shared", "degree")

    def __init__(self, tri: array, dual: array, shared: array, degree: array):
        self.tri = tri
        self.dual = dual
        self.shared = shared
        self.degree = degree

    def __len__(self) -> int:
        return len(self.tri) // 3

    def triangle(self, t: int) -> tuple[int, int, int]:
        return tuple(self.tri[3 * t:3 * t + 3])

    @property
    def triangles(self) -> list[tuple[int, int, int]]:
        it = iter(self.tri)
        return list(zip(it, it, it))

    @property
    def dual_edges(self) -> list[tuple[int, int]]:
        it = iter(self.dual)
        return list(zip(it, it))

    @property
    def shared_edge(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.dual_edges, self.shared))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(len(self))]
        for s, t in self.dual_edges:
            adj[s].append(t)
            adj[t].append(s)
        for a in adj:
            a.sort()
        return adj


@dataclass(frozen=True)
class ExtendedTriangle:
    triangle: tuple[int, int, int]
    edge_set: frozenset[int]


def _pair(s: int, q: int) -> tuple[int, int]:
    """The two numbers with sum ``s`` and sum of squares ``q``."""
    d = isqrt(2 * q - s * s)
    return (s - d) // 2, (s + d) // 2


def recognize_mop(G: Graph) -> OuterplanarDual:
    n = G.n
    if n < 3:
        raise NotMOPError("small", f"{n} vertices")
    if G.m != 2 * n - 3:
        raise NotMOPError("wrong-edge-count", f"{G.m} edges, expected {2 * n - 3}")
    # per vertex, side by side: live degree, then sums over live incident
    # edges of the neighbor, its square, the edge id and neighbor times edge
    # id; a degree-2 vertex's two neighbors and which edge leads to which
    # are read back from these sums
    st = array("q", bytes(40 * n))
    for e, (u, v) in enumerate(G.edges):
        x = 5 * u
        st[x] += 1
        st[x + 1] += v
        st[x + 2] += v * v
        st[x + 3] += e
        st[x + 4] += v * e
        x = 5 * v
        st[x] += 1
        st[x + 1] += u
        st[x + 2] += u * u
        st[x + 3] += e
        st[x + 4] += u * e
    degree = st[0::5]
    index = G._index
    tri = array("q")
    dual = array("q")
    shared = array("q")
    owner = array("q", [-1]) * G.m  # first triangle on each edge, or -2 once on two

    def add_triangle(a: int, b: int, c: int, edges) -> None:
        t = len(tri) // 3
        tri.extend((a, b, c))
        for e in edges:
            s = owner[e]
            if s == -1:
                owner[e] = t
            elif s == -2:
                raise NotMOPError("edge-in-three-triangles", f"edge {G.edges[e]}")
            else:
                owner[e] = -2
                dual.extend((s, t))
                shared.append(e)

    alive = n
    queue = deque(v for v in range(n) if st[5 * v] == 2)
    removed = bytearray(n)
    while alive > 3 and queue:
        v = queue.popleft()
        x = 5 * v
        if removed[v] or st[x] != 2:
            continue
        a, b = _pair(st[x + 1], st[x + 2])
        ab = index.get((a, b))
        if ab is None:
            continue
        # ea + eb = E and a * ea + b * eb = P
        E = st[x + 3]
        ea = (st[x + 4] - b * E) // (a - b)
        eb = E - ea
        if v < a:
            add_triangle(v, a, b, (ea, eb, ab))
        elif v < b:
            add_triangle(a, v, b, (ea, eb, ab))
        else:
            add_triangle(a, b, v, (ea, eb, ab))
        removed[v] = 1
        alive -= 1
        for w, e in ((a, ea), (b, eb)):
            y = 5 * w
            st[y] -= 1
            st[y + 1] -= v
            st[y + 2] -= v * v
            st[y + 3] -= e
            st[y + 4] -= v * e
            if st[y] == 2:
                queue.append(w)
    if alive > 3:
        if not G.is_connected():
            raise NotMOPError("disconnected")
        raise NotMOPError("no-ear", f"{alive} vertices left")
    a, b, c = (v for v in range(n) if not removed[v])
    sides = (index.get((a, b)), index.get((a, c)), index.get((b, c)))
    if None in sides:
        raise NotMOPError("no-ear", "last three vertices are not a triangle")
    add_triangle(a, b, c, sides)
    return OuterplanarDual(tri, dual, shared, degree)


def extended_triangle(G: Graph, tri: tuple[int, int, int]) -> ExtendedTriangle:
    es: set[int] = set()
    for v in tri:
        es.update(G.incident(v))
    return ExtendedTriangle(tri, frozenset(es))


def extended_triangle_phi(G: Graph, dual: OuterplanarDual) -> tuple[int, ExtendedTriangle]:
    """Largest extended triangle, by ``d(a) + d(b) + d(c) - 3``."""
    deg = dual.degree
    tri = dual.tri
    best, phi = 0, -1
    for t in range(len(tri) // 3):
        d = deg[tri[3 * t]] + deg[tri[3 * t + 1]] + deg[tri[3 * t + 2]]
        if d > phi:
            best, phi = t, d
    return phi - 3, extended_triangle(G, dual.triangle(best))


def greedy_strong_coloring(G: Graph, dual: OuterplanarDual) -> StrongColoring:
    """Breadth-first over the dual from its first leaf; each triangle colors the
    uncolored edges at its vertices with the lowest colors absent from its
    extended triangle."""
    adj = dual.adjacency()
    root = next(t for t in range(len(adj)) if len(adj[t]) <= 1)
    colors = [-1] * G.m
    seen = [False] * len(adj)
    seen[root] = True
    queue = deque([root])
    while queue:
        t = queue.popleft()
        ext = sorted(extended_triangle(G, dual.triangle(t)).edge_set)
        present = {colors[e] for e in ext if colors[e] >= 0}
        c = 0
        for e in ext:
            if colors[e] < 0:
                while c in present:
                    c += 1
                colors[e] = c
                present.add(c)
        for s in adj[t]:
            if not seen[s]:
                seen[s] = True
                queue.append(s)
    return StrongColoring(tuple(colors))


def mop_strong_index(G: Graph, dual: OuterplanarDual | None = None) -> tuple[int, StrongColoring]:
    """Strong chromatic index of a maximal outerplanar graph with a coloring attaining it."""
    if dual is None:
        dual = recognize_mop(G)
    phi, _ = extended_triangle_phi(G, dual)
    c = greedy_strong_coloring(G, dual)
    if c.used() > phi:
        raise GraphError(f"greedy coloring used {c.used()} colors, more than {phi}")
    return phi, StrongColoring(c.colors, phi)
