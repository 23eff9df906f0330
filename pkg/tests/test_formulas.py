from __future__ import annotations

import random

import pytest
from conftest import brute_strong_index, complete, path, star

from strongcolor.formulas import (DoubleWheelSpec, cycle_color_sequence, cycle_index, double_wheel_index,
                                  edge_clique_bound, halin_upper_bound, tree_index, wheel_index)
from strongcolor.generators import cycle_graph, random_tree
from strongcolor.graph import GraphError, StrongColoring
from strongcolor.oracle import exact_strong_index, verify_strong_coloring


@pytest.mark.parametrize("n,k", [(6, 3), (5, 5), (7, 4)])
def test_cycle_index(n, k):
    assert cycle_index(n) == k


@pytest.mark.parametrize("n,k", [(3, 6), (5, 10), (7, 11)])
def test_wheel_index(n, k):
    assert wheel_index(n) == k


@pytest.mark.parametrize("dx,dy,want", [(3, 3, (5, 9)), (3, 5, (7, 9)), (4, 4, (7, 8))])
def test_double_wheel_index(dx, dy, want):
    assert double_wheel_index(DoubleWheelSpec(dx, dy)) == want


def test_double_wheel_spec_rejects():
    with pytest.raises(GraphError):
        DoubleWheelSpec(4, 3)
    with pytest.raises(GraphError):
        DoubleWheelSpec(2, 5)


def test_cycle_index_rejects_short():
    with pytest.raises(GraphError):
        cycle_index(2)


@pytest.mark.parametrize("n", range(3, 40))
def test_cycle_color_sequence(n):
    seq = cycle_color_sequence(n)
    c = StrongColoring(tuple(seq))
    assert c.k == cycle_index(n)
    assert verify_strong_coloring(cycle_graph(n), c) is None


def test_tree_index_examples():
    assert tree_index(star(6)) == 6
    assert tree_index(path(4)) == 3
    with pytest.raises(GraphError):
        tree_index(cycle_graph(4))


def test_tree_index_random_15():
    rng = random.Random(15)
    T = random_tree(15, rng)
    assert tree_index(T) == exact_strong_index(T)[0]


def test_tree_index_small_trees_brute():
    rng = random.Random(3)
    for _ in range(20):
        T = random_tree(rng.randint(2, 9), rng)
        assert tree_index(T) == brute_strong_index(T)


def test_halin_upper_bound():
    G3 = complete(4)
    assert halin_upper_bound(G3) == 10
    assert exact_strong_index(G3)[0] == 6 <= 10
    assert halin_upper_bound(star(5)) == 14


def test_edge_clique_bound():
    assert edge_clique_bound(path(4)) == 3
    assert edge_clique_bound(complete(4)) == 5
