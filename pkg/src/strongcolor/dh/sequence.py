"""Pruning sequences: building distance-hereditary graphs from an edge."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph, GraphError

PENDANT = "pendant"
TRUE_TWIN = "true_twin"
FALSE_TWIN = "false_twin"
OPS = (PENDANT, TRUE_TWIN, FALSE_TWIN)


@dataclass(frozen=True)
class PruningStep:
    vertex: int
    op: str
    anchor: int


@dataclass(frozen=True)
class PruningSequence:
    """Base edge plus steps in construction order, on vertices ``0..n-1``."""

    n: int
    base: tuple[int, int]
    steps: tuple[PruningStep, ...]

    def order(self) -> list[int]:
        return [self.base[0], self.base[1]] + [s.vertex for s in self.steps]


def replay_sequence(seq: PruningSequence) -> Graph:
    """Graph obtained from the base edge by applying every step in order.

    Edges are listed in creation order.
    """
    a, b = seq.base
    if a == b or not (0 <= a < seq.n and 0 <= b < seq.n):
        raise GraphError(f"invalid base edge {seq.base}")
    present = {a, b}
    nbrs: dict[int, set[int]] = {a: {b}, b: {a}}
    pairs = [(a, b)]
    for step in seq.steps:
        x, u = step.vertex, step.anchor
        if u not in present:
            raise GraphError(f"anchor {u} of vertex {x} does not exist yet")
        if x in present or not 0 <= x < seq.n:
            raise GraphError(f"vertex {x} is invalid or already present")
        if step.op == PENDANT:
            new = [u]
        elif step.op == TRUE_TWIN:
            new = sorted(nbrs[u]) + [u]
        elif step.op == FALSE_TWIN:
            new = sorted(nbrs[u])
        else:
            raise GraphError(f"unknown operation {step.op!r}")
        present.add(x)
        nbrs[x] = set(new)
        for w in new:
            nbrs[w].add(x)
            pairs.append((w, x))
    if len(present) != seq.n:
        raise GraphError(f"sequence covers {len(present)} of {seq.n} vertices")
    return Graph(seq.n, pairs)
