"""Twinset decompositions built from pruning sequences.

Walking the construction backwards, each vertex's subtree is glued onto its
anchor's subtree when the vertex is reached. A node ``e`` stands for the
induced subgraph ``G_e`` on the vertices glued so far; its twinset ``S_e``
is the set of those vertices that still see the rest of the graph, and
they all see it the same way.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph, GraphError
from .sequence import FALSE_TWIN, PENDANT, TRUE_TWIN, PruningSequence

JOIN = "join"
UNION = "union"

# which twinset the glued node keeps
KEEP_FIRST = "first"
KEEP_UNION = "union"


@dataclass
class DecompNode:
    """Leaf (``vertex >= 0``) or gluing of ``left`` (anchor side) and ``right``."""

    vertex: int = -1
    left: int = -1
    right: int = -1
    op: str = ""
    keep: str = ""
    ts_size: int = 1
    size: int = 1


@dataclass
class TwinsetDecomposition:
    nodes: list[DecompNode]
    root: int
    n: int

    def vertices(self, e: int) -> list[int]:
        out, stack = [], [e]
        while stack:
            i = stack.pop()
            node = self.nodes[i]
            if node.vertex >= 0:
                out.append(node.vertex)
            else:
                stack.extend((node.left, node.right))
        return out

    def twinset(self, e: int) -> list[int]:
        out, stack = [], [e]
        while stack:
            i = stack.pop()
            node = self.nodes[i]
            if node.vertex >= 0:
                out.append(node.vertex)
            elif node.keep == KEEP_FIRST:
                stack.append(node.left)
            else:
                stack.extend((node.left, node.right))
        return out

    def postorder(self) -> list[int]:
        out, stack = [], [self.root]
        while stack:
            i = stack.pop()
            out.append(i)
            node = self.nodes[i]
            if node.vertex < 0:
                stack.extend((node.left, node.right))
        return out[::-1]


_RULES = {
    PENDANT: (JOIN, KEEP_FIRST),
    TRUE_TWIN: (JOIN, KEEP_UNION),
    FALSE_TWIN: (UNION, KEEP_UNION),
}


def build_decomposition(seq: PruningSequence) -> TwinsetDecomposition:
    """Decomposition whose root glues the two base vertices' subtrees."""
    n = seq.n
    if len(seq.steps) != n - 2:
        raise GraphError(f"sequence has {len(seq.steps)} steps for {n} vertices")
    nodes = [DecompNode(vertex=v) for v in range(n)]
    top = list(range(n))  # current subtree of each vertex
    seen = set(seq.base)
    for step in seq.steps:
        if step.anchor not in seen or step.vertex in seen:
            raise GraphError(f"invalid step {step}")
        seen.add(step.vertex)
    for step in reversed(seq.steps):
        op, keep = _RULES[step.op]
        a, b = top[step.anchor], top[step.vertex]
        ts = nodes[a].ts_size + (nodes[b].ts_size if keep == KEEP_UNION else 0)
        nodes.append(DecompNode(left=a, right=b, op=op, keep=keep, ts_size=ts,
                                size=nodes[a].size + nodes[b].size))
        top[step.anchor] = len(nodes) - 1
    a, b = top[seq.base[0]], top[seq.base[1]]
    nodes.append(DecompNode(left=a, right=b, op=JOIN, keep=KEEP_UNION,
                            ts_size=nodes[a].ts_size + nodes[b].ts_size, size=n))
    return TwinsetDecomposition(nodes, len(nodes) - 1, n)


def check_twinsets(G: Graph, D: TwinsetDecomposition) -> list[int]:
    """Nodes violating the twinset property: members see different outside neighbors,
    or a vertex outside the twinset sees the outside at all."""
    bad = []
    for e in D.postorder():
        inside = set(D.vertices(e))
        ts = set(D.twinset(e))
        outside = [frozenset(w for w in G.neighbors(v) if w not in inside) for v in inside]
        by_v = dict(zip(inside, outside))
        if len({by_v[v] for v in ts}) > 1 or any(by_v[v] for v in inside - ts):
            bad.append(e)
    return bad
