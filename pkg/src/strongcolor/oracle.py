"""Exact strong chromatic index by branch-and-bound on L(G)^2.

This is the class-agnostic ground truth; it is exponential and meant for
graphs with a few dozen edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import Graph, GraphError, StrongColoring, conflict_sets

DEFAULT_BUDGET = 10_000_000


class OracleBudgetError(RuntimeError):
    """The search exceeded its node budget; no answer is given."""


class UncoloredEdgeError(GraphError):
    """A coloring does not assign a color to every edge."""


@dataclass(frozen=True)
class Violation:
    e: int
    f: int
    reason: str  # "shared-endpoint" or "distance-one"

    def __str__(self) -> str:
        return f"edges {self.e} and {self.f} share a color ({self.reason})"


def _color_list(G: Graph, c) -> list[int]:
    if isinstance(c, StrongColoring):
        colors = list(c.colors)
    elif isinstance(c, Mapping):
        missing = [e for e in range(G.m) if e not in c]
        if missing:
            raise UncoloredEdgeError(f"edge {missing[0]} has no color")
        colors = [c[e] for e in range(G.m)]
    else:
        colors = list(c)
    if len(colors) != G.m:
        raise UncoloredEdgeError(f"{len(colors)} colors for {G.m} edges")
    for e, col in enumerate(colors):
        if col is None or col < 0:
            raise UncoloredEdgeError(f"edge {e} has no color")
    return colors


def verify_strong_coloring(G: Graph, c) -> Violation | None:
    """Return ``None`` if ``c`` is a strong edge coloring, else one witness pair."""
    colors = _color_list(G, c)
    # shared endpoints first so the reported reason is the most specific one
    for v in range(G.n):
        seen: dict[int, int] = {}
        for _, e in G.adj[v]:
            if colors[e] in seen:
                f = seen[colors[e]]
                return Violation(min(e, f), max(e, f), "shared-endpoint")
            seen[colors[e]] = e
    for u, v in G.edges:
        # any edge joining the colour classes at u and v
        at_u = {colors[e]: e for _, e in G.adj[u]}
        for _, f in G.adj[v]:
            e = at_u.get(colors[f])
            if e is not None and e != f:
                return Violation(min(e, f), max(e, f), "distance-one")
    return None


class _Search:
    def __init__(self, G: Graph, budget: int):
        if G.m == 0:
            raise GraphError("graph has no edges")
        self.m = G.m
        nb = conflict_sets(G)
        self.nbrs = [sorted(s) for s in nb]
        self.adj = [0] * G.m
        for e, s in enumerate(nb):
            mask = 0
            for f in s:
                mask |= 1 << f
            self.adj[e] = mask
        self.budget = budget
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise OracleBudgetError(f"search budget of {self.budget} nodes exceeded")

    # -- maximum clique ------------------------------------------------
    def _color_bound(self, P: int) -> list[tuple[int, int]]:
        out = []
        color = 0
        adj = self.adj
        while P:
            color += 1
            Q = P
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~adj[v] & ~low
                P &= ~low
                out.append((v, color))
        return out

    def max_clique(self) -> list[int]:
        best: list[int] = []

        def expand(R: list[int], P: int) -> None:
            nonlocal best
            self._tick()
            for v, bound in reversed(self._color_bound(P)):
                if len(R) + bound <= len(best):
                    return
                R.append(v)
                newP = P & self.adj[v]
                if newP:
                    expand(R, newP)
                elif len(R) > len(best):
                    best = list(R)
                R.pop()
                P &= ~(1 << v)

        expand([], (1 << self.m) - 1)
        return best

    # -- colouring ------------------------------------------------------
    def greedy(self) -> list[int]:
        """DSATUR; an upper bound."""
        colors = [-1] * self.m
        forb = [0] * self.m
        for _ in range(self.m):
            v = max(
                (u for u in range(self.m) if colors[u] < 0),
                key=lambda u: (bin(forb[u]).count("1"), len(self.nbrs[u])),
            )
            c = 0
            while forb[v] >> c & 1:
                c += 1
            colors[v] = c
            for w in self.nbrs[v]:
                forb[w] |= 1 << c
        return colors

    def k_coloring(self, k: int, seed_clique: Sequence[int]) -> list[int] | None:
        m = self.m
        if len(seed_clique) > k:
            return None
        colors = [-1] * m
        count = [[0] * k for _ in range(m)]
        forb = [0] * m
        nbrs = self.nbrs

        def assign(v: int, c: int) -> None:
            colors[v] = c
            for w in nbrs[v]:
                row = count[w]
                if row[c] == 0:
                    forb[w] |= 1 << c
                row[c] += 1

        def unassign(v: int) -> None:
            c = colors[v]
            colors[v] = -1
            for w in nbrs[v]:
                row = count[w]
                row[c] -= 1
                if row[c] == 0:
                    forb[w] &= ~(1 << c)

        for i, v in enumerate(seed_clique):
            assign(v, i)
        full = (1 << k) - 1

        def solve(n_left: int, top: int) -> bool:
            if n_left == 0:
                return True
            self._tick()
            best = -1
            best_key = (-1, -1)
            for u in range(m):
                if colors[u] < 0:
                    f = forb[u]
                    if f == full:
                        return False
                    key = (bin(f).count("1"), len(nbrs[u]))
                    if key > best_key:
                        best_key = key
                        best = u
            v = best
            limit = min(top + 1, k - 1)
            for c in range(limit + 1):
                if not forb[v] >> c & 1:
                    assign(v, c)
                    if solve(n_left - 1, max(top, c)):
                        return True
                    unassign(v)
            return False

        if solve(m - len(seed_clique), len(seed_clique) - 1):
            return colors
        return None


def max_clique_lg2(G: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Size of a largest set of edges pairwise within distance one."""
    return len(_Search(G, budget).max_clique())


def strong_k_coloring(G: Graph, k: int, budget: int = DEFAULT_BUDGET) -> StrongColoring | None:
    """A strong edge coloring with at most ``k`` colors, or ``None`` if none exists."""
    s = _Search(G, budget)
    clique = s.max_clique()
    colors = s.k_coloring(k, clique)
    if colors is None:
        return None
    return StrongColoring(tuple(colors), k)


def exact_strong_index(
    G: Graph, upper_hint: int | None = None, budget: int = DEFAULT_BUDGET
) -> tuple[int, StrongColoring]:
    """Return ``(k, coloring)`` with ``k`` the strong chromatic index of ``G``.

    Raises :class:`OracleBudgetError` rather than returning an unproven value.
    """
    s = _Search(G, budget)
    clique = s.max_clique()
    upper = s.greedy()
    ub = max(upper) + 1
    # a valid hint caps the first pass; an invalid one only costs the retry
    cap = ub if upper_hint is None else min(ub, upper_hint + 1)
    for k in list(range(len(clique), cap)) + list(range(max(cap, len(clique)), ub)):
        colors = s.k_coloring(k, clique)
        if colors is not None:
            return k, StrongColoring(tuple(colors), k)
    return ub, StrongColoring(tuple(upper), ub)
