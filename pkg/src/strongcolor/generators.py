"""Seeded constructors for every graph family the algorithms handle."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any

from .dh.cograph import Cotree, cotree_graph
from .dh.sequence import FALSE_TWIN, PENDANT, TRUE_TWIN, PruningSequence, PruningStep, replay_sequence
from .graph import Graph, GraphError, build_graph
from .halin.structure import HalinAnnotation, halin_from_tree

FAMILIES = ("cycle", "wheel", "double_wheel", "necklace", "halin", "cubic_halin",
            "tree", "dh", "cograph", "mop")

__all__ = ["FAMILIES", "GenSpec", "generate", "replay_sequence"]


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    ``n`` is the vertex count for most families, the rim size for wheels and
    cycles, and the spine length for necklaces. ``max_degree`` bounds the
    random Halin trees; ``probs`` weights pendant/true twin/false twin steps.
    ``twin_cap``, when set, turns twin steps on anchors of that degree or
    more into pendant steps, keeping distance-hereditary graphs sparse.
    """

    family: str
    n: int = 0
    seed: int = 0
    dx: int = 3
    dy: int = 3
    max_degree: int = 6
    probs: tuple[float, float, float] = field(default=(1 / 3, 1 / 3, 1 / 3))
    twin_cap: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}")
        if not 0 <= self.seed < 2**64:
            raise GraphError("seed must fit in 64 bits")


def generate(spec: GenSpec) -> tuple[Graph, dict[str, Any]]:
    """Return ``(graph, annotations)``; annotations carry the family certificate."""
    rng = random.Random(spec.seed)
    fam = spec.family
    if fam == "cycle":
        return cycle_graph(spec.n), {}
    if fam == "wheel":
        G, ann = wheel(spec.n)
        return G, {"halin": ann}
    if fam == "double_wheel":
        G, ann = double_wheel(spec.dx, spec.dy)
        return G, {"halin": ann}
    if fam == "necklace":
        G, ann = necklace(spec.n)
        return G, {"halin": ann}
    if fam == "halin":
        G, ann = random_halin(spec.n, rng, spec.max_degree)
        return G, {"halin": ann}
    if fam == "cubic_halin":
        G, ann = random_halin(spec.n, rng, 3)
        return G, {"halin": ann}
    if fam == "tree":
        return random_tree(spec.n, rng), {}
    if fam == "dh":
        seq = random_dh_sequence(spec.n, rng, spec.probs, spec.twin_cap)
        return replay_sequence(seq), {"dh": seq}
    if fam == "cograph":
        T = random_cotree(spec.n, rng)
        return cotree_graph(T, spec.n), {"cotree": T}
    G = random_mop(spec.n, rng)
    return G, {}


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(n: int) -> tuple[Graph, HalinAnnotation]:
    """Rim vertices ``0..n-1``, hub ``n``; spokes are the tree."""
    if n < 3:
        raise GraphError(f"wheel needs at least 3 rim vertices, got {n}")
    return halin_from_tree(n + 1, [(n, i) for i in range(n)], list(range(n)))


def double_wheel(dx: int, dy: int) -> tuple[Graph, HalinAnnotation]:
    """Hubs ``0`` (degree dx) and ``1`` (degree dy), adjacent; leaves in plane order."""
    if not 3 <= dx <= dy:
        raise GraphError(f"double wheel needs 3 <= dx <= dy, got ({dx}, {dy})")
    pairs = [(0, 1)]
    leaves = []
    nxt = 2
    for _ in range(dx - 1):
        pairs.append((0, nxt))
        leaves.append(nxt)
        nxt += 1
    for _ in range(dy - 1):
        pairs.append((1, nxt))
        leaves.append(nxt)
        nxt += 1
    return halin_from_tree(nxt, pairs, leaves)


def necklace(h: int) -> tuple[Graph, HalinAnnotation]:
    """Cubic Halin graph over a caterpillar with ``h`` spine vertices.

    The end spine vertices carry two leaves each, the inner ones one leaf on
    the same side; the opposite side of the cycle is a single long edge.
    ``necklace(2)`` is the prism.
    """
    if h < 2:
        raise GraphError(f"necklace needs at least 2 spine vertices, got {h}")
    spine = list(range(h))
    pairs = [(i, i + 1) for i in range(h - 1)]
    nxt = h
    top: list[int] = []
    for i in spine:
        pairs.append((i, nxt))
        top.append(nxt)
        nxt += 1
    bottom = []
    for i in (h - 1, 0):
        pairs.append((i, nxt))
        bottom.append(nxt)
        nxt += 1
    return halin_from_tree(nxt, pairs, top + bottom)


def random_halin(n: int, rng: random.Random, max_degree: int = 6) -> tuple[Graph, HalinAnnotation]:
    """Random Halin graph with at most ``n`` vertices and maximum degree ``max_degree``.

    Grows a plane tree by expanding random leaves into internal vertices with
    at least two children, so no vertex has degree two. With
    ``max_degree == 3`` the graph is cubic.
    """
    if max_degree < 3 or n < 4:
        raise GraphError("random Halin graphs need n >= 4 and max_degree >= 3")
    d0 = rng.randint(3, min(max_degree, n - 1))
    children: list[list[int]] = [list(range(1, d0 + 1))] + [[] for _ in range(d0)]
    count = d0 + 1
    leaves = list(range(1, d0 + 1))
    while n - count >= 2:
        i = rng.randrange(len(leaves))
        x = leaves[i]
        leaves[i] = leaves[-1]
        leaves.pop()
        c = rng.randint(2, min(max_degree - 1, n - count))
        new = list(range(count, count + c))
        count += c
        children[x] = new
        children.extend([] for _ in new)
        leaves.extend(new)
    pairs = [(v, c) for v in range(count) for c in children[v]]
    order: list[int] = []
    stack = [0]
    while stack:
        v = stack.pop()
        if not children[v]:
            order.append(v)
        stack.extend(reversed(children[v]))
    return halin_from_tree(count, pairs, order)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n < 2:
        raise GraphError("trees need at least 2 vertices")
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[rng.randrange(i)], perm[i]) for i in range(1, n)]
    return build_graph(n, pairs)


def random_dh_sequence(
    n: int,
    rng: random.Random,
    probs: tuple[float, float, float] = (1 / 3, 1 / 3, 1 / 3),
    twin_cap: int | None = None,
) -> PruningSequence:
    """Random pruning sequence on ``n`` shuffled vertex labels."""
    if n < 2:
        raise GraphError("distance-hereditary graphs here need at least 2 vertices")
    perm = list(range(n))
    rng.shuffle(perm)
    ops = (PENDANT, TRUE_TWIN, FALSE_TWIN)
    deg = [0] * n
    deg[0] = deg[1] = 1
    nbrs: list[list[int]] | None = [[] for _ in range(n)] if twin_cap is not None else None
    if nbrs is not None:
        nbrs[0].append(1)
        nbrs[1].append(0)
    steps = []
    for i in range(2, n):
        op = rng.choices(ops, weights=probs)[0]
        j = rng.randrange(i)
        if nbrs is not None:
            if op != PENDANT and deg[j] >= twin_cap:
                op = PENDANT
            new = [j] if op == PENDANT else list(nbrs[j]) + ([j] if op == TRUE_TWIN else [])
            nbrs[i] = new
            deg[i] = len(new)
            for w in new:
                nbrs[w].append(i)
                deg[w] += 1
        steps.append(PruningStep(perm[i], op, perm[j]))
    return PruningSequence(n, (perm[0], perm[1]), tuple(steps))


def random_cotree(n: int, rng: random.Random) -> Cotree:
    """Random cotree on leaves ``0..n-1`` with alternating labels."""
    if n < 1:
        raise GraphError("cographs need at least one vertex")
    labels = list(range(n))
    rng.shuffle(labels)

    def build(vs: list[int], kind: str) -> Cotree:
        if len(vs) == 1:
            return Cotree("leaf", vs[0], ())
        parts = rng.randint(2, min(3, len(vs)))
        cuts = sorted(rng.sample(range(1, len(vs)), parts - 1))
        chunks = [vs[a:b] for a, b in zip([0] + cuts, cuts + [len(vs)])]
        other = "union" if kind == "join" else "join"
        return Cotree(kind, -1, tuple(build(c, other) for c in chunks))

    return build(labels, rng.choice(("join", "union")))


def random_mop(n: int, rng: random.Random) -> Graph:
    """Random triangulated polygon: new vertices are inserted on random boundary edges."""
    if n < 3:
        raise GraphError("maximal outerplanar graphs need at least 3 vertices")
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(0, 1), (1, 2), (2, 0)]
    boundary = [(0, 1), (1, 2), (2, 0)]
    for v in range(3, n):
        i = rng.randrange(len(boundary))
        a, b = boundary[i]
        boundary[i] = (a, v)
        boundary.append((v, b))
        pairs.append((a, v))
        pairs.append((v, b))
    return build_graph(n, [(perm[a], perm[b]) for a, b in pairs])
