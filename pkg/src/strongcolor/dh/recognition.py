"""Recognizing distance-hereditary graphs by pruning pendants and twins.

Vertices are removed one at a time while a pendant vertex or a twin pair
exists. Twins are found through sum hashes of open and closed
neighborhoods, kept in buckets and updated as neighbors disappear; every
candidate pair is confirmed by comparing neighbor sets.
"""

from __future__ import annotations

import random

from ..graph import Graph, GraphError
from .sequence import FALSE_TWIN, PENDANT, TRUE_TWIN, PruningSequence, PruningStep


class NotDHError(GraphError):
    """No pendant vertex or twin pair is left in the remaining ``vertices``."""

    def __init__(self, vertices: list[int]):
        self.vertices = vertices
        super().__init__(f"not distance-hereditary: {len(vertices)} vertices remain with no pendant or twin")


def recognize_dh(G: Graph, seed: int = 0x5EED) -> PruningSequence:
    """Pruning sequence of ``G``; raises :class:`NotDHError` if there is none."""
    n = G.n
    if n < 2:
        raise GraphError("need at least 2 vertices")
    rng = random.Random(seed)
    key = [rng.getrandbits(62) for _ in range(n)]
    nbrs = [{w for w, _ in a} for a in G.adj]
    h_open = [sum(key[w] for w in nb) for nb in nbrs]
    # hash -> vertices that had it; entries go stale when a vertex dies or its
    # hash changes and are dropped on the next scan of the bucket
    open_b: dict[int, list[int]] = {}
    closed_b: dict[int, list[int]] = {}

    def add(b: dict[int, list[int]], h: int, v: int) -> None:
        lst = b.get(h)
        if lst is None:
            b[h] = [v]
        else:
            lst.append(v)

    for v in range(n):
        add(open_b, h_open[v], v)
        add(closed_b, h_open[v] + key[v], v)

    def live(b: dict[int, list[int]], h: int, closed: bool) -> list[int]:
        lst = b[h]
        out = [w for w in lst if not dead[w] and h_open[w] + (key[w] if closed else 0) == h]
        if len(out) != len(lst):
            b[h] = out
        return out

    def find_twin(v: int) -> tuple[str, int] | None:
        nv = nbrs[v]
        if nv:
            # an empty neighborhood would make isolated vertices false twins
            for w in live(open_b, h_open[v], False):
                if w != v and nbrs[w] == nv:
                    return FALSE_TWIN, w
        for w in live(closed_b, h_open[v] + key[v], True):
            if w != v and w in nv and len(nbrs[w]) == len(nv) and nbrs[w] - nv == {v}:
                return TRUE_TWIN, w
        return None

    alive = n
    removed: list[PruningStep] = []
    # pendants are taken before any twin
    pendants = [v for v in range(n - 1, -1, -1) if len(nbrs[v]) == 1]
    queue = list(range(n - 1, -1, -1))
    queued = [True] * n
    dead = [False] * n
    while (queue or pendants) and alive > 2:
        if pendants:
            v = pendants.pop()
            if dead[v] or len(nbrs[v]) != 1:
                continue
        else:
            v = queue.pop()
            queued[v] = False
            if dead[v]:
                continue
        if len(nbrs[v]) == 1:
            (u,) = nbrs[v]
            step = PruningStep(v, PENDANT, u)
        else:
            found = find_twin(v)
            if found is None:
                continue
            step = PruningStep(v, found[0], found[1])
        removed.append(step)
        dead[v] = True
        alive -= 1
        for w in nbrs[v]:
            nbrs[w].discard(v)
            h = h_open[w] - key[v]
            h_open[w] = h
            add(open_b, h, w)
            add(closed_b, h + key[w], w)
            if len(nbrs[w]) == 1:
                pendants.append(w)
            if not queued[w]:
                queued[w] = True
                queue.append(w)
        # vertices sharing the anchor's bucket may now be twins of it
        u = step.anchor
        if not queued[u]:
            queued[u] = True
            queue.append(u)
    rest = [v for v in range(n) if not dead[v]]
    if alive > 2 or rest[1] not in nbrs[rest[0]]:
        if not G.is_connected():
            raise GraphError("graph is disconnected")
        raise NotDHError(rest)
    a, b = rest
    return PruningSequence(n, (a, b), tuple(reversed(removed)))
