from __future__ import annotations

import pytest
from conftest import complete, cycle, prism

from strongcolor.generators import GenSpec, generate
from strongcolor.graph import build_graph, conflict_sets
from strongcolor.oracle import exact_strong_index, verify_strong_coloring
from strongcolor.outerplanar import (
    NotMOPError,
    extended_triangle,
    extended_triangle_phi,
    greedy_strong_coloring,
    mop_strong_index,
    recognize_mop,
)


def _mop(n: int, seed: int):
    G, _ = generate(GenSpec("mop", n=n, seed=seed))
    return G


def _uncovered_pairs(G, dual) -> int:
    """Conflicting edge pairs that share no extended triangle."""
    covered = set()
    for t in dual.triangles:
        es = sorted(extended_triangle(G, t).edge_set)
        for i, e in enumerate(es):
            for f in es[i + 1:]:
                covered.add((e, f))
    bad = 0
    for e, nb in enumerate(conflict_sets(G)):
        bad += sum(1 for f in nb if e < f and (e, f) not in covered)
    return bad


def test_triangle():
    G = complete(3)
    dual = recognize_mop(G)
    assert len(dual) == 1 and dual.dual_edges == []
    phi, c = mop_strong_index(G, dual)
    assert phi == 3 and sorted(c.colors) == [0, 1, 2]


def test_fan_of_four():
    G = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    dual = recognize_mop(G)
    assert len(dual) == 2
    assert dual.dual_edges == [(0, 1)]
    assert G.edges[dual.shared[0]] == (0, 2)
    phi, c = mop_strong_index(G, dual)
    # every pair of the five edges is within distance one
    assert phi == 5 == exact_strong_index(G)[0]
    assert verify_strong_coloring(G, c) is None


@pytest.mark.parametrize("G,reason", [
    (build_graph(2, [(0, 1)]), "small"),
    (cycle(4), "wrong-edge-count"),
    (prism(), "no-ear"),
    (build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]), "edge-in-three-triangles"),
])
def test_rejections(G, reason):
    with pytest.raises(NotMOPError) as info:
        recognize_mop(G)
    assert info.value.reason == reason


def test_rejects_disconnected():
    # K5 plus a separate edge has 2n-3 edges
    G = build_graph(7, [(u, v) for u in range(5) for v in range(u + 1, 5)] + [(5, 6)])
    with pytest.raises(NotMOPError) as info:
        recognize_mop(G)
    assert info.value.reason == "disconnected"


def test_dual_is_a_tree_on_n_minus_2_triangles():
    for seed in range(20):
        G = _mop(30, seed)
        dual = recognize_mop(G)
        assert len(dual) == G.n - 2
        assert len(dual.dual_edges) == G.n - 3
        assert all(len(a) <= 3 for a in dual.adjacency())
        for (s, t), e in dual.shared_edge.items():
            u, v = G.edges[e]
            assert {u, v} <= set(dual.triangle(s)) & set(dual.triangle(t))


def test_phi_matches_oracle_small():
    for seed in range(30):
        G = _mop(3 + seed % 12, seed)
        phi, c = mop_strong_index(G)
        assert phi == exact_strong_index(G)[0]
        assert verify_strong_coloring(G, c) is None


def test_phi_is_largest_extended_triangle():
    G = _mop(40, 3)
    dual = recognize_mop(G)
    phi, witness = extended_triangle_phi(G, dual)
    assert phi == len(witness.edge_set)
    assert phi == max(len(extended_triangle(G, t).edge_set) for t in dual.triangles)


def test_phi_bounded_by_max_degree():
    for seed in range(40):
        G = _mop(5 + seed * 4, seed)
        delta = max(len(a) for a in G.adj)
        if delta >= 3:
            assert mop_strong_index(G)[0] <= 3 * (delta - 1)


def test_conflicting_pairs_share_an_extended_triangle():
    for seed, n in enumerate((3, 4, 10, 50, 120, 200)):
        G = _mop(n, seed)
        assert _uncovered_pairs(G, recognize_mop(G)) == 0


def test_greedy_uses_exactly_phi_on_large_mop():
    G = _mop(2000, 7)
    dual = recognize_mop(G)
    phi, _ = extended_triangle_phi(G, dual)
    c = greedy_strong_coloring(G, dual)
    assert verify_strong_coloring(G, c) is None
    assert c.used() == phi
