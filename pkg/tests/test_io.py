from __future__ import annotations

import pytest
from conftest import cycle

from strongcolor.generators import FAMILIES, GenSpec, generate
from strongcolor.graph import StrongColoring
from strongcolor.io import (PALETTE, ParseError, color_name, format_coloring, format_dot, format_graph,
                            parse_coloring, parse_graph)


@pytest.mark.parametrize("family", FAMILIES)
def test_round_trip(family):
    G, ann = generate(GenSpec(family, n=9, seed=4))
    gf = parse_graph(format_graph(G, ann, comment="fixture"))
    assert gf.graph == G
    for key, value in ann.items():
        assert gf.annotations[key] == value


def test_comments_and_blank_lines():
    gf = parse_graph("# a triangle\n3 3\n\n0 1\n# mid\n1 2\n2 0\n")
    assert gf.graph.m == 3 and gf.annotations == {}


@pytest.mark.parametrize("text", [
    "",
    "3\n",
    "3 2\n0 1\n",
    "3 1\n0 1\n1 2\n",
    "3 1\n0 3\n",
    "3 1\n1 1\n",
    "2 1\n0 x\n",
    "3 2\n0 1\n#halin\n1 2\n",
    "3 1\n0 1\n#dh\nbase: 0 1\nseq: sideways 2 0\n",
    "3 1\n0 1\n#halin\ntree: 0\n",
    "3 3\n0 1\n1 2\n0 2\n#cograph\ncotree: J(0 1\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_coloring_round_trip():
    c = StrongColoring((0, 1, 2, 0, 1, 2))
    assert parse_coloring(format_coloring(c), 6) == c


@pytest.mark.parametrize("text", ["0 0\n", "0 0\n0 1\n1 1\n", "0 0\n9 1\n", "0 -1\n1 0\n"])
def test_coloring_errors(text):
    with pytest.raises(ParseError):
        parse_coloring(text, 2)


def test_palette_cycles_with_suffix():
    assert len(PALETTE) == 16
    assert color_name(0) == PALETTE[0]
    assert color_name(16) == PALETTE[0] + "1"
    assert color_name(33) == PALETTE[1] + "2"
    assert len({color_name(c) for c in range(64)}) == 64


def test_dot_output():
    G = cycle(6)
    dot = format_dot(G, StrongColoring((0, 1, 2, 0, 1, 2)))
    assert dot.startswith("graph G {") and dot.rstrip().endswith("}")
    assert dot.count("--") == 6 and f'color="{PALETTE[2]}"' in dot
