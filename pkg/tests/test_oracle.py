from __future__ import annotations

import random

import pytest
from conftest import brute_strong_index, complete, cycle, figure2, path, prism, star

from strongcolor.formulas import tree_index
from strongcolor.generators import random_tree
from strongcolor.graph import StrongColoring, build_graph
from strongcolor.oracle import (OracleBudgetError, exact_strong_index, max_clique_lg2,
                                strong_k_coloring, verify_strong_coloring)


def test_verify_c6_three_colors():
    assert verify_strong_coloring(cycle(6), StrongColoring((0, 1, 2, 0, 1, 2))) is None


def test_verify_c6_alternating():
    v = verify_strong_coloring(cycle(6), StrongColoring((0, 1, 0, 1, 0, 1)))
    assert v is not None and v.reason == "distance-one"


def test_verify_p3_same_color():
    v = verify_strong_coloring(path(3), StrongColoring((0, 0)))
    assert v is not None and v.reason == "shared-endpoint"


@pytest.mark.parametrize("G,k", [(cycle(5), 5), (complete(4), 6), (prism(), 9), (star(5), 5), (path(4), 3)])
def test_exact_examples(G, k):
    got, c = exact_strong_index(G)
    assert got == k
    assert verify_strong_coloring(G, c) is None and c.used() == k


def test_figure2_by_enumeration():
    G = figure2()
    assert exact_strong_index(G)[0] == brute_strong_index(G) == 6


def test_clique_below_index():
    rng = random.Random(2)
    for _ in range(15):
        G = random_tree(rng.randint(2, 12), rng)
        k = exact_strong_index(G)[0]
        assert max_clique_lg2(G) == k == tree_index(G)
    for G in (cycle(7), prism(), complete(5), figure2()):
        assert max_clique_lg2(G) <= exact_strong_index(G)[0]


def test_k_coloring_decision():
    assert strong_k_coloring(cycle(5), 4) is None
    c = strong_k_coloring(cycle(5), 5)
    assert c is not None and verify_strong_coloring(cycle(5), c) is None


def test_oracle_matches_brute_force():
    rng = random.Random(8)
    for _ in range(25):
        n = rng.randint(3, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45]
        G = build_graph(n, pairs)
        assert exact_strong_index(G)[0] == brute_strong_index(G)


def test_budget_exhaustion():
    # on C7 the clique bound 3 is below the index 4, so the search must branch
    with pytest.raises(OracleBudgetError):
        exact_strong_index(cycle(7), budget=5)
