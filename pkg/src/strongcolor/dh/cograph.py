"""Cotrees and the strong chromatic index of cographs.

For cographs L(G)^2 is trivially perfect, so the index equals its clique
number. A join of parts with ``n1`` and ``n2`` vertices contributes
``n1 * n2`` edges that conflict with everything inside, and the two parts'
edges conflict with each other; a union adds nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph, GraphError, StrongColoring


class NotCographError(GraphError):
    pass


@dataclass(frozen=True)
class Cotree:
    kind: str  # "leaf", "union" or "join"
    vertex: int
    children: tuple["Cotree", ...]

    def leaves(self) -> list[int]:
        out, stack = [], [self]
        while stack:
            t = stack.pop()
            if t.kind == "leaf":
                out.append(t.vertex)
            else:
                stack.extend(t.children)
        return out


def _postorder(T: Cotree) -> list[Cotree]:
    out, stack = [], [T]
    while stack:
        t = stack.pop()
        out.append(t)
        stack.extend(t.children)
    return out[::-1]


def cotree_graph(T: Cotree, n: int) -> Graph:
    """The cograph a cotree evaluates to."""
    pairs: list[tuple[int, int]] = []
    verts: dict[int, list[int]] = {}
    for t in _postorder(T):
        if t.kind == "leaf":
            verts[id(t)] = [t.vertex]
            continue
        acc: list[int] = []
        for c in t.children:
            vs = verts.pop(id(c))
            if t.kind == "join":
                pairs.extend((a, b) for a in acc for b in vs)
            acc.extend(vs)
        verts[id(t)] = acc
    if sorted(verts[id(T)]) != list(range(n)):
        raise GraphError("cotree leaves are not 0..n-1")
    return Graph(n, pairs)


def _components(G: Graph, vs: list[int], inside: set[int], complement: bool) -> list[list[int]]:
    unvisited = set(vs)
    comps = []
    while unvisited:
        s = unvisited.pop()
        comp = [s]
        queue = [s]
        while queue:
            v = queue.pop()
            nb = {w for w in G.neighbors(v) if w in inside}
            if complement:
                reach = unvisited - nb
            else:
                reach = unvisited & nb
            unvisited -= reach
            comp.extend(reach)
            queue.extend(reach)
        comps.append(sorted(comp))
    return comps


def recognize_cograph(G: Graph) -> Cotree:
    """Cotree of ``G``; raises :class:`NotCographError` if ``G`` has an induced P4."""
    if G.n == 0:
        raise NotCographError("empty graph")

    def build(vs: list[int]) -> Cotree:
        if len(vs) == 1:
            return Cotree("leaf", vs[0], ())
        inside = set(vs)
        comps = _components(G, vs, inside, complement=False)
        if len(comps) > 1:
            return Cotree("union", -1, tuple(build(c) for c in comps))
        comps = _components(G, vs, inside, complement=True)
        if len(comps) > 1:
            return Cotree("join", -1, tuple(build(c) for c in comps))
        raise NotCographError(f"induced subgraph on {len(vs)} vertices is connected and co-connected")

    return build(list(range(G.n)))


def cograph_strong_index(G: Graph, cotree: Cotree | None = None) -> tuple[int, StrongColoring]:
    """Strong chromatic index of a cograph with a coloring attaining it."""
    T = cotree if cotree is not None else recognize_cograph(G)
    if G.m == 0:
        return 0, StrongColoring((), 0)
    colors = [-1] * G.m
    # per node: its vertices, its index, and its edges with their colors
    info: dict[int, tuple[list[int], int, list[int]]] = {}
    for t in _postorder(T):
        if t.kind == "leaf":
            info[id(t)] = ([t.vertex], 0, [])
            continue
        acc_v: list[int] = []
        acc_k = 0
        acc_e: list[int] = []
        for c in t.children:
            vs, k, es = info.pop(id(c))
            if t.kind == "union":
                acc_k = max(acc_k, k)
            else:
                for e in es:
                    colors[e] += acc_k
                nxt = acc_k + k
                for a in acc_v:
                    for b in vs:
                        e = G.edge_id(a, b)
                        colors[e] = nxt
                        es.append(e)
                        nxt += 1
                acc_k = nxt
            acc_v.extend(vs)
            acc_e.extend(es)
        info[id(t)] = (acc_v, acc_k, acc_e)
    _, k, _ = info[id(T)]
    return k, StrongColoring(tuple(colors), k)
