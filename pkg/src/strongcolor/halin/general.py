"""Strong chromatic index of Halin graphs of any degree.

The DP keeps, for a partially processed graph, only what later edges can
see. Processed edges are grouped into *types* by the set of unprocessed
edges they conflict with; a coloring is then the 0/1 matrix "type i uses
color j", and two colorings are equivalent when a color permutation maps
one matrix to the other. A class is stored as the sorted multiset of its
columns (each column a bitmask of types), which carries exactly the same
information as the cardinalities ``|W(S)|`` of colors shared by all types
in ``S``. Types whose edges conflict with nothing unprocessed are dropped,
freeing their colors.

Subtrees are processed bottom-up: a leaf contributes its parent edge and
the cycle edge to its left; an internal vertex merges its children's
classes left to right and then adds its own parent edge. The root leaf's
right cycle edge closes the cycle.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from ..formulas import (
    DoubleWheelSpec,
    cycle_color_sequence,
    double_wheel_index,
    tree_index,
    wheel_index,
)
from ..graph import Graph, GraphError, StrongColoring, conflict_sets
from .structure import HalinAnnotation, RootedHalin, root_halin, tree_of

log = logging.getLogger(__name__)

State = tuple[int, ...]  # sorted column masks


@dataclass(frozen=True)
class TypePartitionState:
    """A coloring class: which types share each color, up to color permutation."""

    columns: State
    n_types: int

    def cardinalities(self) -> dict[frozenset[int], int]:
        """``|W(S)|`` for every nonempty type set ``S``."""
        out = {}
        for r in range(1, self.n_types + 1):
            for S in combinations(range(self.n_types), r):
                mask = sum(1 << i for i in S)
                out[frozenset(S)] = sum(1 for c in self.columns if c & mask == mask)
        return out

    @classmethod
    def from_cardinalities(cls, card: dict[frozenset[int], int], n_types: int) -> "TypePartitionState":
        """Inverse of :meth:`cardinalities` (inclusion-exclusion over supersets)."""
        columns: list[int] = []
        full = (1 << n_types) - 1
        for mask in range(1, full + 1):
            S = frozenset(i for i in range(n_types) if mask >> i & 1)
            rest = [i for i in range(n_types) if i not in S]
            exact = 0
            for r in range(len(rest) + 1):
                for extra in combinations(rest, r):
                    exact += (-1) ** r * card[S | frozenset(extra)]
            columns.extend([mask] * exact)
        return cls(tuple(sorted(columns)), n_types)


class _Step:
    """One table: types (edge group, still-conflicting edges) and reachable classes."""

    __slots__ = ("types", "processed", "table", "op", "prev", "edge", "remap", "shift")

    def __init__(self, types, processed, op, prev=(), edge=-1):
        self.types: list[tuple[frozenset[int], frozenset[int]]] = types
        self.processed: frozenset[int] = processed
        self.table: dict[State, tuple] = {}
        self.op = op
        self.prev = prev
        self.edge = edge
        self.remap: list[int] = []
        self.shift = 0


def _regroup(types, newly: frozenset[int]):
    """Drop ``newly`` from every type's conflict set; merge equal types; drop empty ones.

    Returns the new types and per old type its new bit (0 when dropped).
    """
    new_types: list[tuple[frozenset[int], frozenset[int]]] = []
    index: dict[frozenset[int], int] = {}
    remap = []
    edges_of: list[set[int]] = []
    for edges, fut in types:
        f = fut - newly if newly else fut
        if not f:
            remap.append(0)
            continue
        i = index.get(f)
        if i is None:
            i = index[f] = len(edges_of)
            edges_of.append(set())
        edges_of[i].update(edges)
        remap.append(1 << i)
    futs = sorted(index, key=index.__getitem__)
    new_types = [(frozenset(edges_of[i]), futs[i]) for i in range(len(futs))]
    return new_types, remap


def _apply(mask: int, remap: list[int]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= remap[i]
        mask >>= 1
        i += 1
    return out


def _dead_matching(rest_a, rest_b) -> dict[int, int]:
    """Maximum matching of compatible A/B columns where at least one side drops out."""
    adj = []
    for (pa, bad), _ in rest_a:
        adj.append([j for j, ((pb, _), cb) in enumerate(rest_b)
                    if not bad & cb and not (pa and pb)])
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                if j not in owner or augment(owner[j], seen):
                    owner[j] = i
                    return True
        return False

    for i in range(len(rest_a)):
        augment(i, set())
    return {i: j for j, i in owner.items()}


class InterfaceDP:
    """Decision procedure "strong coloring with at most ``k`` colors" over a merge tree."""

    def __init__(self, G: Graph, k: int):
        self.G = G
        self.k = k
        self.conf = [frozenset(s) for s in conflict_sets(G)]

    def start(self) -> _Step:
        s = _Step([], frozenset(), "start")
        s.table[()] = ()
        return s

    def _finish(self, s: _Step, pre_types, newly, raw: dict[State, tuple]) -> _Step:
        types, remap = _regroup(pre_types, newly)
        s.types = types
        s.remap = remap
        memo: dict[int, int] = {}
        for cols, bp in raw.items():
            out = []
            for c in cols:
                m = memo.get(c)
                if m is None:
                    m = memo[c] = _apply(c, remap)
                if m:
                    out.append(m)
            key = tuple(sorted(out))
            if key not in s.table:
                s.table[key] = (cols, bp)
        return s

    def add(self, prev: _Step, e: int) -> _Step:
        processed = prev.processed | {e}
        bit = 1 << len(prev.types)
        conflict = 0
        for i, (_, fut) in enumerate(prev.types):
            if e in fut:
                conflict |= 1 << i
        pre_types = prev.types + [(frozenset([e]), self.conf[e] - processed)]
        raw: dict[State, tuple] = {}
        for cols in prev.table:
            seen = set()
            for j, c in enumerate(cols):
                if c & conflict or c in seen:
                    continue
                seen.add(c)
                new = cols[:j] + (c | bit,) + cols[j + 1:]
                raw.setdefault(tuple(sorted(new)), (cols, c))
            if len(cols) < self.k:
                raw.setdefault(tuple(sorted(cols + (bit,))), (cols, -1))
        s = _Step([], processed, "add", (prev,), e)
        return self._finish(s, pre_types, frozenset([e]), raw)

    def merge(self, A: _Step, B: _Step) -> _Step:
        shift = len(A.types)
        # each side's conflict sets still list the other side's edges
        pre = [(ed, fut - B.processed) for ed, fut in A.types] + [
            (ed, fut - A.processed) for ed, fut in B.types
        ]
        types, remap = _regroup(pre, frozenset())
        # A-type i clashes with B-type j when some edge of j is in i's conflict set
        clash_a = []
        for _, fut in A.types:
            clash_a.append(sum(1 << j for j, (ed, _) in enumerate(B.types) if not fut.isdisjoint(ed)))
        clash_b = [sum(1 << i for i, m in enumerate(clash_a) if m >> j & 1) for j in range(len(B.types))]

        def spread(mask: int, table: list[int]) -> int:
            r, i = 0, 0
            while mask:
                if mask & 1:
                    r |= table[i]
                mask >>= 1
                i += 1
            return r

        # columns agreeing on (merged mask, clash set) are interchangeable
        def grouped(step: _Step, clash: list[int], offset: int):
            memo: dict[int, tuple[int, int]] = {}
            out = {}
            for st in step.table:
                g: dict[tuple[int, int], list[int]] = {}
                for c in st:
                    key = memo.get(c)
                    if key is None:
                        key = memo[c] = (_apply(c << offset, remap), spread(c, clash))
                    g.setdefault(key, []).append(c)
                out[st] = sorted(g.items())
            return out

        ga_all = grouped(A, clash_a, 0)
        gb_all = grouped(B, clash_b, shift)
        k = self.k
        table: dict[State, tuple] = {}
        for ca, ga in ga_all.items():
            for cb, gb in gb_all.items():
                for pairs in self._pairings(ga, gb):
                    # pairs of live columns fix the result; columns whose types
                    # all drop out can still share a color to stay within k
                    taken_a = [0] * len(ga)
                    taken_b = [0] * len(gb)
                    raw = []
                    post = []
                    for i, j in pairs:
                        raw.append(ga[i][1][taken_a[i]] | gb[j][1][taken_b[j]] << shift)
                        post.append(ga[i][0][0] | gb[j][0][0])
                        taken_a[i] += 1
                        taken_b[j] += 1
                    rest_a = [(key, c) for i, (key, cols) in enumerate(ga) for c in cols[taken_a[i]:]]
                    rest_b = [(key, c) for j, (key, cols) in enumerate(gb) for c in cols[taken_b[j]:]]
                    post.extend(key[0] for key, _ in rest_a if key[0])
                    post.extend(key[0] for key, _ in rest_b if key[0])
                    key = tuple(sorted(post))
                    if key in table:
                        continue
                    excess = len(ca) + len(cb) - len(pairs) - k
                    if excess > 0:
                        dead = sum(1 for kk, _ in rest_a if not kk[0]) + sum(1 for kk, _ in rest_b if not kk[0])
                        if dead < excess:
                            continue
                        match = _dead_matching(rest_a, rest_b)
                        if len(match) < excess:
                            continue
                    else:
                        match = {}
                    matched_b = set(match.values())
                    for ia, (_, c) in enumerate(rest_a):
                        jb = match.get(ia)
                        raw.append(c if jb is None else c | rest_b[jb][1] << shift)
                    raw.extend(c << shift for jb, (_, c) in enumerate(rest_b) if jb not in matched_b)
                    table[key] = (tuple(raw), (ca, cb, ()))
        s = _Step(types, A.processed | B.processed, "merge", (A, B))
        s.shift = shift
        s.remap = remap
        s.table = table
        return s

    @staticmethod
    def _pairings(ga, gb) -> Iterator[list[tuple[int, int]]]:
        """Pairings of live A column groups with compatible live B groups, as index pairs.

        Groups are ``((merged mask, clash set), columns)``; a group is live
        when its merged mask is nonzero. Only one pairing is produced per
        distinct (merged columns, unpaired columns) outcome.
        """
        nb = len(gb)
        b_masks = [cols[0] for _, cols in gb]
        live_b = [j for j in range(nb) if gb[j][0][0]]
        states: dict[tuple, list[tuple[int, int]]] = {
            (tuple(len(cols) for _, cols in gb), (), ()): []
        }
        for i, ((pa, bad), cols) in enumerate(ga):
            options = [j for j in live_b if not bad & b_masks[j]] if pa else []
            nxt: dict[tuple, list[tuple[int, int]]] = {}
            for (left, post, rem), pairs in states.items():
                left_l = list(left)

                def dist(t: int, todo: int, added: list[int], taken: list[tuple[int, int]]):
                    if t == len(options) or todo == 0:
                        new_post = tuple(sorted(post + tuple(added) + (pa,) * (todo if pa else 0)))
                        key = (tuple(left_l), new_post, rem + (todo,))
                        if key not in nxt:
                            nxt[key] = pairs + taken
                        return
                    j = options[t]
                    pj = gb[j][0][0]
                    for take in range(min(todo, left_l[j]), -1, -1):
                        left_l[j] -= take
                        dist(t + 1, todo - take, added + [pa | pj] * take, taken + [(i, j)] * take)
                        left_l[j] += take

                dist(0, len(cols), [], [])
            states = nxt
        for pairs in states.values():
            yield pairs

    # -- certificates ---------------------------------------------------
    def reconstruct(self, final: _Step, state: State) -> list[int]:
        colors = [-1] * self.G.m
        stack: list[tuple[_Step, State, list[tuple[int, int]]]] = [
            (final, state, [])
        ]
        k = self.k
        while stack:
            step, st, cmap = stack.pop()
            if step.op == "start":
                continue
            pre_cols, bp = step.table[st]
            buckets: dict[int, list[int]] = {}
            for m, c in cmap:
                buckets.setdefault(m, []).append(c)
            taken = {c for _, c in cmap}
            free = (c for c in range(k) if c not in taken)
            pre_colors = []
            for c in pre_cols:
                m = _apply(c, step.remap)
                pre_colors.append(buckets[m].pop() if m else next(free))
            if step.op == "add":
                prev = step.prev[0]
                prev_cols, chosen = bp
                bit = 1 << len(prev.types)
                back = []
                for c, col in zip(pre_cols, pre_colors):
                    if c & bit:
                        colors[step.edge] = col
                        if chosen >= 0:
                            back.append((chosen, col))
                    else:
                        back.append((c, col))
                stack.append((prev, prev_cols, back))
            else:
                A, B = step.prev
                ca, cb, _ = bp
                low = (1 << step.shift) - 1
                back_a, back_b = [], []
                for c, col in zip(pre_cols, pre_colors):
                    if c & low:
                        back_a.append((c & low, col))
                    if c >> step.shift:
                        back_b.append((c >> step.shift, col))
                stack.append((A, ca, back_a))
                stack.append((B, cb, back_b))
        return colors


def _halin_colorable(R: RootedHalin, k: int) -> StrongColoring | None:
    G = R.G
    dp = InterfaceDP(G, k)
    steps: dict[int, _Step] = {}
    for x in R.postorder:
        kids = R.children[x]
        if not kids:
            s = dp.add(dp.start(), R.parent_edge[x])
            s = dp.add(s, R.left_edge[x])
        else:
            s = steps.pop(kids[0])
            for c in kids[1:]:
                if not s.table:
                    break
                s = dp.merge(s, steps.pop(c))
            s = dp.add(s, R.parent_edge[x])
        if not s.table:
            return None
        steps[x] = s
    s = dp.add(steps[R.top], R.right_edge[R.leaves[-1]])
    if not s.table:
        return None
    state = next(iter(s.table))
    colors = dp.reconstruct(s, state)
    return StrongColoring(tuple(colors), k)


def halin_strong_colorable(G: Graph, ann: HalinAnnotation | RootedHalin, k: int) -> StrongColoring | None:
    """Decide whether a Halin graph has a strong coloring with ``k`` colors."""
    R = ann if isinstance(ann, RootedHalin) else root_halin(G, ann)
    return _halin_colorable(R, k)


def _wheel_coloring(R: RootedHalin) -> StrongColoring:
    G = R.G
    n = len(R.leaves)
    seq = cycle_color_sequence(n)
    kc = max(seq) + 1
    colors = [-1] * G.m
    hub = R.top
    for i, leaf in enumerate(R.leaves):
        colors[R.right_edge[leaf]] = seq[i]
        colors[G.edge_id(leaf, hub)] = kc + i
    return StrongColoring(tuple(colors), kc + n)


def halin_index(G: Graph, ann: HalinAnnotation) -> tuple[int, StrongColoring]:
    """Strong chromatic index of a Halin graph with a certificate.

    Wheels and double wheels use their closed forms; otherwise the DP is
    tried for ``k`` from the tree's index upward (at most six values).
    """
    R = root_halin(G, ann)
    internal = R.internal_vertices()
    T = tree_of(G, ann)
    lo = tree_index(T)
    if len(internal) == 1:
        return wheel_index(len(R.leaves)), _wheel_coloring(R)
    if len(internal) == 2:
        dx, dy = sorted(T.degree(v) for v in internal)
        _, k = double_wheel_index(DoubleWheelSpec(dx, dy))
        c = _halin_colorable(R, k)
        if c is None:
            raise GraphError(f"double wheel ({dx}, {dy}) has no {k}-coloring; formula contradicted")
        return k, c
    for k in range(lo, lo + 6):
        c = _halin_colorable(R, k)
        if c is not None:
            if k > lo + 3:
                log.warning("index %d exceeds tree index + 3 (%d) on a non-wheel Halin graph", k, lo + 3)
            return k, c
    raise GraphError(f"no strong coloring with at most {lo + 5} colors found")
