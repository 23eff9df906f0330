"""Strong chromatic index of distance-hereditary graphs.

For these graphs ``L(G)^2`` is perfect, so the index is its clique number,
computed bottom-up over a twinset decomposition. For a node with twinset
``S`` a clique of ``L(G_e)^2`` is *pure* when every edge touches ``S``.
Pure cliques of the two sides of a join, together with all join edges
``X``, form a clique. A clique with some edge away from ``S`` can only grow
by the join edges at the twinset vertices adjacent to an endpoint of every
such edge; per node we keep the best pure clique and the Pareto frontier
of ``(size, number of such twinset vertices)`` over the other cliques.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..graph import Graph, GraphError, StrongColoring, conflict_sets
from ..oracle import strong_k_coloring, verify_strong_coloring
from .decomposition import JOIN, KEEP_FIRST, TwinsetDecomposition, build_decomposition
from .recognition import recognize_dh
from .sequence import PruningSequence

log = logging.getLogger(__name__)

EDGES = "edges"
VERTICES = "vertices"


@dataclass
class NodeValue:
    omega: int
    pure: int
    frontier: list[tuple[int, int]]


def _pareto(points) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for a, r in sorted(set(points), key=lambda p: (-p[0], -p[1])):
        if not out or r > out[-1][1]:
            out.append((a, r))
    return tuple(out)


def clique_values(D: TwinsetDecomposition, neighbor_count: str = EDGES) -> list[NodeValue]:
    """Per decomposition node: clique number, best pure clique and frontier.

    ``neighbor_count="vertices"`` credits a reached twinset vertex once
    instead of once per join edge; it is kept for comparison and only gives
    a lower bound.
    """
    vals = _values(D, neighbor_count, keep_all=True)
    return [NodeValue(o, p, list(f)) for o, p, f in vals]


def _values(D: TwinsetDecomposition, neighbor_count: str, keep_all: bool) -> list:
    if neighbor_count not in (EDGES, VERTICES):
        raise ValueError(f"neighbor_count must be {EDGES!r} or {VERTICES!r}")
    per_edge = neighbor_count == EDGES
    nodes = D.nodes
    leaf = (0, 0, ())
    vals: list = [None] * len(nodes)
    # children are always created before their parent
    for i, node in enumerate(nodes):
        if node.vertex >= 0:
            vals[i] = leaf
            continue
        l, r = node.left, node.right
        a_om, a_pure, a_front = vals[l]
        b_om, b_pure, b_front = vals[r]
        if not keep_all:
            vals[l] = vals[r] = None
        if node.op != JOIN:
            front = _pareto(a_front + b_front) if a_front and b_front else a_front or b_front
            vals[i] = (max(a_om, b_om), max(a_pure, b_pure), front)
            continue
        sa, sb = nodes[l].ts_size, nodes[r].ts_size
        x = sa * sb
        ga = sb if per_edge else 1
        gb = sa if per_edge else 1
        pts = [(a + r_ * ga, r_) for a, r_ in a_front]
        if node.keep == KEEP_FIRST:
            pure = a_pure + x
            if b_pure:
                pts.append((a_pure + b_pure + x, sa))
            pts.extend((b + r_ * gb, 0) for b, r_ in b_front)
        else:
            pure = a_pure + b_pure + x
            pts.extend((b + r_ * gb, r_) for b, r_ in b_front)
        front = tuple(_pareto(pts)) if pts else ()
        omega = max(a_om, b_om, pure, front[0][0] if front else 0)
        vals[i] = (omega, pure, front)
    return vals


def dh_clique_number(G: Graph, seq: PruningSequence | None = None, neighbor_count: str = EDGES) -> int:
    """``omega(L(G)^2)`` for a distance-hereditary graph."""
    if seq is None:
        seq = recognize_dh(G)
    D = build_decomposition(seq)
    return _values(D, neighbor_count, keep_all=False)[D.root][0]


def _greedy(conf: list[set[int]], order: list[int], m: int) -> list[int]:
    colors = [-1] * m
    for e in order:
        taken = {colors[f] for f in conf[e]}
        c = 0
        while c in taken:
            c += 1
        colors[e] = c
    return colors


def _dsatur(conf: list[set[int]], m: int) -> list[int]:
    colors = [-1] * m
    sat: list[set[int]] = [set() for _ in range(m)]
    left = set(range(m))
    while left:
        e = max(left, key=lambda f: (len(sat[f]), len(conf[f]), -f))
        c = 0
        while c in sat[e]:
            c += 1
        colors[e] = c
        left.discard(e)
        for f in conf[e]:
            sat[f].add(c)
    return colors


def _smallest_last(conf: list[set[int]], m: int) -> list[int]:
    deg = [len(s) for s in conf]
    buckets: dict[int, set[int]] = {}
    for e in range(m):
        buckets.setdefault(deg[e], set()).add(e)
    gone = [False] * m
    order = []
    d = 0
    for _ in range(m):
        d = max(d - 1, 0)
        while not buckets.get(d):
            d += 1
        e = buckets[d].pop()
        gone[e] = True
        order.append(e)
        for f in conf[e]:
            if not gone[f]:
                buckets[deg[f]].discard(f)
                deg[f] -= 1
                buckets.setdefault(deg[f], set()).add(f)
    return order[::-1]


def dh_coloring(G: Graph, k: int) -> StrongColoring:
    """Strong coloring with exactly ``k`` colors, ``k`` the clique number of ``L(G)^2``.

    Greedy colorings over a few orders and DSATUR are tried first; if none
    reaches ``k``, an exact search for a ``k``-coloring is run (and logged).
    """
    m = G.m
    if m == 0:
        return StrongColoring((), 0)
    conf = conflict_sets(G)
    tries = [
        lambda: _greedy(conf, _smallest_last(conf, m), m),
        lambda: _greedy(conf, list(range(m)), m),
        lambda: _greedy(conf, list(range(m - 1, -1, -1)), m),
        lambda: _dsatur(conf, m),
    ]
    for attempt in tries:
        colors = attempt()
        if max(colors) + 1 <= k:
            return StrongColoring(tuple(colors), k)
    log.info("greedy colorings exceed %d colors; searching exactly", k)
    c = strong_k_coloring(G, k)
    if c is None:
        raise GraphError(f"no strong coloring with {k} colors; the graph is not distance-hereditary?")
    return c


def dh_strong_index(
    G: Graph, seq: PruningSequence | None = None, neighbor_count: str = EDGES
) -> tuple[int, StrongColoring]:
    """Strong chromatic index of a distance-hereditary graph with a coloring attaining it."""
    k = dh_clique_number(G, seq, neighbor_count)
    c = dh_coloring(G, k)
    v = verify_strong_coloring(G, c)
    if v is not None:
        raise GraphError(f"constructed coloring is not strong: {v}")
    return k, c
