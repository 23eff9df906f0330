from __future__ import annotations

import networkx as nx
import pytest

from strongcolor.dh.recognition import recognize_dh
from strongcolor.dh.sequence import FALSE_TWIN, PruningSequence, PruningStep, replay_sequence
from strongcolor.generators import FAMILIES, GenSpec, generate
from strongcolor.graph import GraphError
from strongcolor.halin.structure import validate_halin
from strongcolor.outerplanar import recognize_mop


def _nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def test_necklace_2_is_complement_of_c6():
    G, _ = generate(GenSpec("necklace", n=2))
    assert nx.is_isomorphic(_nx(G), nx.complement(nx.cycle_graph(6)))


def test_wheel_5():
    G, ann = generate(GenSpec("wheel", n=5))
    assert (G.n, G.m) == (6, 10)
    validate_halin(G, ann["halin"])


def test_dh_12_seed_11_recognized():
    G, ann = generate(GenSpec("dh", n=12, seed=11))
    recognize_dh(G)
    assert replay_sequence(ann["dh"]) == G


def test_base_edge_only():
    G = replay_sequence(PruningSequence(2, (0, 1), ()))
    assert (G.n, G.m) == (2, 1)


def test_c4_from_two_false_twins():
    # 0-1, then 2 false twin of 0 (sees 1), then 3 false twin of 1 (sees 0 and 2)
    seq = PruningSequence(4, (0, 1), (PruningStep(2, FALSE_TWIN, 0), PruningStep(3, FALSE_TWIN, 1)))
    G = replay_sequence(seq)
    assert nx.is_isomorphic(_nx(G), nx.cycle_graph(4))


@pytest.mark.parametrize("family", FAMILIES)
def test_deterministic_in_seed(family):
    spec = GenSpec(family, n=9, seed=123)
    G1, a1 = generate(spec)
    G2, a2 = generate(spec)
    assert G1 == G2 and a1 == a2


@pytest.mark.parametrize("n", [3, 5, 14, 60])
def test_mop_family(n):
    for seed in range(5):
        G, _ = generate(GenSpec("mop", n=n, seed=seed))
        assert G.m == 2 * n - 3
        assert len(recognize_mop(G)) == n - 2


def test_halin_families_validate():
    for fam in ("halin", "cubic_halin"):
        for seed in range(10):
            G, ann = generate(GenSpec(fam, n=14, seed=seed))
            validate_halin(G, ann["halin"])
            if fam == "cubic_halin":
                assert all(G.degree(v) == 3 for v in range(G.n))


def test_halin_degree_cap():
    for seed in range(10):
        G, _ = generate(GenSpec("halin", n=20, seed=seed, max_degree=4))
        assert G.max_degree() <= 4


def test_twin_cap_keeps_dh():
    G, ann = generate(GenSpec("dh", n=300, seed=1, probs=(0.2, 0.4, 0.4), twin_cap=5))
    recognize_dh(G)
    assert replay_sequence(ann["dh"]) == G


def test_bad_family_and_seed():
    with pytest.raises(GraphError):
        GenSpec("petersen")
    with pytest.raises(GraphError):
        GenSpec("mop", n=5, seed=-1)
