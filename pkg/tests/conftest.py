from __future__ import annotations

import itertools

import pytest

from strongcolor.graph import Graph, build_graph


def conflicts_by_definition(G: Graph) -> list[set[int]]:
    """Edge pairs sharing a vertex or joined by an edge, straight from the vertex pairs."""
    out: list[set[int]] = [set() for _ in range(G.m)]
    adjacent = {frozenset(e) for e in G.edges}
    for i, j in itertools.combinations(range(G.m), 2):
        a, b = G.edges[i]
        c, d = G.edges[j]
        if {a, b} & {c, d} or any(frozenset((x, y)) in adjacent for x in (a, b) for y in (c, d)):
            out[i].add(j)
            out[j].add(i)
    return out


def brute_strong_index(G: Graph) -> int:
    """Smallest k admitting a strong edge coloring, by plain backtracking."""
    conf = conflicts_by_definition(G)
    m = G.m
    if m == 0:
        return 0

    def colorable(k: int) -> bool:
        colors = [-1] * m

        def rec(e: int, used: int) -> bool:
            if e == m:
                return True
            taken = {colors[f] for f in conf[e] if f < e}
            # a fresh color is only tried once, so colors are kept in first-use order
            for c in range(min(k, used + 1)):
                if c not in taken:
                    colors[e] = c
                    if rec(e + 1, max(used, c + 1)):
                        return True
            colors[e] = -1
            return False

        return rec(0, 0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def figure2() -> Graph:
    """4-cycle 0-1-2-3 with a pendant vertex on each cycle vertex."""
    return build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    return build_graph(n, list(itertools.combinations(range(n), 2)))


def prism() -> Graph:
    """Complement of the 6-cycle."""
    pairs = [(i, j) for i, j in itertools.combinations(range(6), 2) if (j - i) % 6 not in (1, 5)]
    return build_graph(6, pairs)


@pytest.fixture
def fig2() -> Graph:
    return figure2()
