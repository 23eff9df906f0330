"""Closed forms for cycles, wheels, double wheels and trees."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError


def cycle_index(n: int) -> int:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    if n % 3 == 0:
        return 3
    if n == 5:
        return 5
    return 4


def wheel_index(n: int) -> int:
    """Strong chromatic index of the wheel with ``n`` rim vertices and one hub."""
    return n + cycle_index(n)


def cycle_color_sequence(n: int) -> list[int]:
    """Colors for the edges ``(i, i+1 mod n)`` of C_n using ``cycle_index(n)`` colors.

    For n >= 6 a sequence is strong iff every three cyclically consecutive
    entries differ, which the blocks ``012`` and ``0123`` guarantee.
    """
    k = cycle_index(n)
    if n in (4, 5):
        return list(range(n))
    if k == 3:
        return [i % 3 for i in range(n)]
    # n = 3a + 4b with b = 1 (n = 1 mod 3) or b = 2 (n = 2 mod 3)
    fours = 1 if n % 3 == 1 else 2
    threes = (n - 4 * fours) // 3
    seq: list[int] = []
    for _ in range(threes):
        seq += [0, 1, 2]
    for _ in range(fours):
        seq += [0, 1, 2, 3]
    return seq


@dataclass(frozen=True)
class DoubleWheelSpec:
    dx: int
    dy: int

    def __post_init__(self):
        if not 3 <= self.dx <= self.dy:
            raise GraphError(f"double wheel needs 3 <= dx <= dy, got ({self.dx}, {self.dy})")


def double_wheel_index(spec: DoubleWheelSpec) -> tuple[int, int]:
    """Return ``(index of the tree, index of the double wheel)``."""
    dx, dy = spec.dx, spec.dy
    tree_value = dx + dy - 1
    if dx == dy == 3:
        return tree_value, 9
    if dx == 3:
        return tree_value, dy + 4
    return tree_value, dx + dy


def tree_index(T: Graph) -> int:
    """max d(u) + d(v) - 1 over the edges of a tree."""
    if not T.is_tree() or T.m == 0:
        raise GraphError("input is not a tree with at least one edge")
    return max(T.degree(u) + T.degree(v) - 1 for u, v in T.edges)


def halin_upper_bound(G: Graph) -> int:
    return 2 * G.max_degree() + 4


def edge_clique_bound(G: Graph) -> int:
    """max d(u) + d(v) - 1: the edges at both ends of one edge are pairwise conflicting."""
    return max((G.degree(u) + G.degree(v) - 1 for u, v in G.edges), default=0)
