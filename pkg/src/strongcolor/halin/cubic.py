"""Boundary-coloring DP for cubic Halin graphs.

For every non-root tree vertex ``x`` the table maps colorings of the boundary
``B(x)`` (stored up to color permutation) to a witness that the coloring
extends strongly over ``H(x)``. Tables of the two children are joined on
their common boundary edges; the only new edge is the parent edge of ``x``.
"""

from __future__ import annotations

from ..formulas import edge_clique_bound
from ..graph import Graph, GraphError, StrongColoring, conflict_sets
from .structure import HalinAnnotation, RootedHalin, boundary_edges, root_halin

CUBIC_MAX_COLORS = 10


def canonical(colors: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel colors in order of first appearance."""
    remap: dict[int, int] = {}
    return tuple([remap.setdefault(c, len(remap)) for c in colors])


class _CubicDP:
    def __init__(self, R: RootedHalin, k: int):
        self.R = R
        self.G = R.G
        self.k = k
        self.conf = conflict_sets(self.G)
        self.B = {x: sorted(boundary_edges(self.G, R, x)) for x in R.postorder}
        self.tables: dict[int, dict[tuple[int, ...], tuple | None]] = {}

    def run(self) -> bool:
        for x in self.R.postorder:
            kids = self.R.children[x]
            if not kids:
                self.tables[x] = {(0, 1, 2): None} if self.k >= 3 else {}
            else:
                y, z = kids
                self.tables[x] = self._combine(x, y, z)
            if not self.tables[x]:
                return False
        return True

    def _split(self, Ba: list[int], Bb: list[int], extra: list[int]) -> tuple[list[int], list[int]]:
        """Edges of ``Ba`` seen by the other side (shared or conflicting), and the rest."""
        other = (set(Bb) - set(Ba)) | set(extra)
        inner = [e for e in Ba if e in Bb or not other.isdisjoint(self.conf[e])]
        return inner, [e for e in Ba if e not in inner]

    def _groups(self, B: list[int], inner: list[int], outer: list[int], table) -> dict:
        """Table entries grouped by their pattern on ``inner``.

        Each member is relabeled so inner colors keep their canonical labels
        and colors private to ``outer`` come after them.
        """
        idx = {e: i for i, e in enumerate(B)}
        groups: dict[tuple[int, ...], list] = {}
        for t in table:
            rel = canonical(tuple(t[idx[e]] for e in inner + outer))
            groups.setdefault(rel[: len(inner)], []).append((t, rel[len(inner):]))
        return groups

    def _combine(self, x: int, y: int, z: int) -> dict:
        k = self.k
        By, Bz, Bx = self.B[y], self.B[z], self.B[x]
        extra = [e for e in Bx if e not in By and e not in Bz]
        Iy, Oy = self._split(By, Bz, extra)
        Iz, Oz = self._split(Bz, By, extra)
        gys = self._groups(By, Iy, Oy, self.tables[y])
        gzs = self._groups(Bz, Iz, Oz, self.tables[z])

        # local bit positions over the interface edges
        universe = list(dict.fromkeys(Iy + Iz + extra))
        pos = {e: i for i, e in enumerate(universe)}
        conf = [0] * len(universe)
        for i, e in enumerate(universe):
            for f in self.conf[e]:
                j = pos.get(f)
                if j is not None:
                    conf[i] |= 1 << j
        y_mask = sum(1 << pos[e] for e in Iy)
        x_set = set(Bx)
        out: dict[tuple[int, ...], tuple] = {}

        def z_classes(key):
            cls: dict[int, int] = {}
            for e, c in zip(Iz, key):
                cls[c] = cls.get(c, 0) | 1 << pos[e]
            res = []
            for c, m in sorted(cls.items(), key=lambda cm: not cm[1] & y_mask):
                cm = 0
                for i in range(len(universe)):
                    if m >> i & 1:
                        cm |= conf[i]
                res.append((c, m, m & y_mask, cm))
            return res

        def joint(classes, i, used, n_used, taken, zmap):
            """Colorings of the interface: z classes onto colors, then ``extra``."""
            if i < len(classes):
                label, m, fixed, cm = classes[i]
                if fixed:
                    low = fixed & -fixed
                    cands = [c for c in range(n_used) if used[c] & low]
                else:
                    cands = range(min(n_used + 1, k))
                for c in cands:
                    u = used[c]
                    if taken >> c & 1 or fixed & ~u or cm & u:
                        continue
                    used[c] = u | m
                    zmap[label] = c
                    yield from joint(classes, i + 1, used, max(n_used, c + 1), taken | 1 << c, zmap)
                    used[c] = u
                return
            j = i - len(classes)
            if j < len(extra):
                b = pos[extra[j]]
                for c in range(min(n_used + 1, k)):
                    if not conf[b] & used[c]:
                        used[c] |= 1 << b
                        yield from joint(classes, i + 1, used, max(n_used, c + 1), taken, zmap)
                        used[c] &= ~(1 << b)
                return
            yield used, n_used, zmap

        def private(n_priv: int, palette: set[int], n_used: int):
            """Colors for private classes: outside ``palette``, pairwise distinct."""
            if n_priv == 0:
                yield []
                return
            for c in range(min(n_used + 1, k)):
                if c in palette:
                    continue
                for rest in private(n_priv - 1, palette | {c}, max(n_used, c + 1)):
                    yield [c] + rest

        # y members are expanded per z group, then deduplicated on what the z
        # members can still see: boundary colors outside O(z) and the z palette
        x1 = [e for e in Bx if e not in Oz]
        for gz, zmembers in gzs.items():
            b = max(gz) + 1
            classes = z_classes(gz)
            states: dict[tuple[int, ...], tuple] = {}
            for gy, ymembers in gys.items():
                a = max(gy) + 1
                used = [0] * k
                for e, c in zip(Iy, gy):
                    used[c] |= 1 << pos[e]
                for used, n_used, zmap in joint(classes, 0, used, a, 0, {}):
                    base = {}
                    for c in range(n_used):
                        for i, e in enumerate(universe):
                            if used[c] >> i & 1:
                                base[e] = c
                    ztail = tuple(zmap[l] for l in range(b))
                    for ty, yrel in ymembers:
                        n_yp = max(0, max(yrel, default=-1) + 1 - a)
                        for yp in private(n_yp, set(range(a)), n_used):
                            col = dict(base)
                            for e, l in zip(Oy, yrel):
                                col[e] = l if l < a else yp[l - a]
                            ck = canonical(tuple(col[e] for e in x1) + ztail)
                            if ck not in states:
                                states[ck] = (ty, col, ztail)
            for ck, (ty, col, ztail) in states.items():
                lab: dict[int, int] = {}
                for c in [col[e] for e in x1] + list(ztail):
                    lab.setdefault(c, len(lab))
                n_d = len(lab)
                # colors only on y edges off the boundary act as fresh ones
                for c in col.values():
                    lab.setdefault(c, len(lab))
                full = {e: lab[c] for e, c in col.items()}
                zl = ck[len(x1):]
                z_pal = set(zl)
                for tz, zrel in zmembers:
                    n_zp = max(0, max(zrel, default=-1) + 1 - b)
                    for zp in private(n_zp, z_pal, n_d):
                        for e, l in zip(Oz, zrel):
                            full[e] = zl[l] if l < b else zp[l - b]
                        key = canonical(tuple(full[e] for e in Bx))
                        if key not in out:
                            out[key] = (ty, tz, dict(full))
        return out

    def coloring(self) -> list[int]:
        R, G = self.R, self.G
        colors = [-1] * G.m
        top = R.top
        key = next(iter(self.tables[top]))
        stack = [(top, dict(zip(self.B[top], key)))]
        while stack:
            x, actual = stack.pop()
            for e, c in actual.items():
                colors[e] = c
            kids = R.children[x]
            if not kids:
                continue
            key = canonical(tuple(actual[e] for e in self.B[x]))
            ty, tz, full = self.tables[x][key]
            sigma: dict[int, int] = {}
            for e in self.B[x]:
                sigma[full[e]] = actual[e]
            free = iter(c for c in range(self.k) if c not in sigma.values())
            for c in sorted(set(full.values())):
                if c not in sigma:
                    sigma[c] = next(free)
            real = {e: sigma[c] for e, c in full.items()}
            for e, c in real.items():
                colors[e] = c
            y, z = kids
            stack.append((y, {e: real[e] for e in self.B[y]}))
            stack.append((z, {e: real[e] for e in self.B[z]}))
        return colors


def cubic_strong_colorable(G: Graph, ann: HalinAnnotation | RootedHalin, k: int) -> StrongColoring | None:
    """Decide whether a cubic Halin graph has a strong coloring with ``k`` colors."""
    R = ann if isinstance(ann, RootedHalin) else root_halin(G, ann)
    dp = _CubicDP(R, k)
    if not dp.run():
        return None
    return StrongColoring(tuple(dp.coloring()), k)


def cubic_halin_index(G: Graph, ann: HalinAnnotation) -> tuple[int, StrongColoring]:
    """Strong chromatic index of a cubic Halin graph, with a certificate."""
    R = root_halin(G, ann)
    if any(G.degree(v) != 3 for v in range(G.n)):
        raise GraphError("graph is not cubic")
    for k in range(edge_clique_bound(G), CUBIC_MAX_COLORS + 1):
        c = cubic_strong_colorable(G, R, k)
        if c is not None:
            return k, c
    raise GraphError(f"no strong coloring with at most {CUBIC_MAX_COLORS} colors found")
