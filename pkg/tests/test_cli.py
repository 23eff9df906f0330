from __future__ import annotations

import csv
import subprocess
import sys

import pytest
from conftest import complete, cycle, figure2, path

from strongcolor.cli import (BENCH_CSV_FIELDS, BUDGET, MISMATCH, OK, PARSE, VIOLATION,
                             _solve, cmd_bench, cmd_compute, detect, main)
from strongcolor.formulas import cycle_index
from strongcolor.generators import GenSpec, generate
from strongcolor.io import format_graph, parse_coloring
from strongcolor.oracle import exact_strong_index


def _write(tmp_path, name, G, ann=None):
    p = tmp_path / name
    p.write_text(format_graph(G, ann))
    return str(p)


def _run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_prism_with_annotation_gives_nine(tmp_path, capsys):
    G, ann = generate(GenSpec("necklace", n=2))
    code, out, _ = _run(["compute", _write(tmp_path, "prism.txt", G, ann)], capsys)
    assert code == OK
    assert "class: halin" in out and "k: 9" in out


def test_cycle_with_pendants_is_dh(tmp_path):
    G = figure2()
    r = cmd_compute(_write(tmp_path, "fig2.txt", G))
    assert r.cls == "dh"
    assert r.k == exact_strong_index(G)[0]


def test_triangle_is_mop(tmp_path):
    r = cmd_compute(_write(tmp_path, "tri.txt", complete(3)))
    assert (r.cls, r.k) == ("mop", 3)


def test_emitted_coloring_and_dot(tmp_path):
    G = figure2()
    col, dot = tmp_path / "c.txt", tmp_path / "g.dot"
    r = cmd_compute(_write(tmp_path, "g.txt", G), emit_coloring=str(col), emit_dot=str(dot))
    c = parse_coloring(col.read_text(), G.m)
    assert c.used() == r.k
    text = dot.read_text()
    assert text.startswith("graph G {") and text.count(" -- ") == G.m


def test_certificate_reverifies_in_separate_process(tmp_path):
    G, ann = generate(GenSpec("halin", n=12, seed=4))
    gpath = _write(tmp_path, "h.txt", G, ann)
    col = str(tmp_path / "h.col")
    cmd_compute(gpath, emit_coloring=col)
    res = subprocess.run([sys.executable, "-m", "strongcolor", "verify", gpath, col],
                         capture_output=True, text=True)
    assert res.returncode == OK, res.stderr
    assert res.stdout.startswith("ok:")


@pytest.mark.parametrize("colors,code", [
    ([0, 1, 2, 0, 1, 2], OK),
    ([0, 1, 0, 1, 0, 1], VIOLATION),
])
def test_verify_c6(tmp_path, capsys, colors, code):
    g = _write(tmp_path, "c6.txt", cycle(6))
    c = tmp_path / "c6.col"
    c.write_text("".join(f"{e} {x}\n" for e, x in enumerate(colors)))
    assert _run(["verify", g, str(c)], capsys)[0] == code


def test_verify_p3_reports_witness(tmp_path, capsys):
    g = _write(tmp_path, "p3.txt", path(3))
    c = tmp_path / "p3.col"
    c.write_text("0 0\n1 0\n")
    code, _, err = _run(["verify", g, str(c)], capsys)
    assert code == VIOLATION
    assert "edge 0" in err and "edge 1" in err and "shared-endpoint" in err


def test_parse_errors_are_distinguished(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n")
    assert _run(["compute", str(bad)], capsys)[0] == PARSE
    g = _write(tmp_path, "p3.txt", path(3))
    c = tmp_path / "p3.col"
    c.write_text("0 0\n")
    assert _run(["verify", g, str(c)], capsys)[0] == PARSE


def test_class_mismatch(tmp_path, capsys):
    # C5 is no maximal outerplanar graph, no cograph, not distance-hereditary
    # and carries no Halin annotation
    g = _write(tmp_path, "c5.txt", cycle(5))
    assert _run(["compute", g], capsys)[0] == MISMATCH
    assert _run(["compute", _write(tmp_path, "p4.txt", path(4)), "--class", "mop"], capsys)[0] == MISMATCH


def test_oracle_budget(tmp_path, capsys):
    g = _write(tmp_path, "c7.txt", cycle(7))
    assert _run(["oracle", g, "--budget", "5"], capsys)[0] == BUDGET
    code, out, _ = _run(["oracle", g], capsys)
    assert code == OK and f"k: {cycle_index(7)}" in out


def test_generate_then_compute(tmp_path, capsys):
    out = str(tmp_path / "w.txt")
    assert _run(["generate", "--family", "wheel", "--n", "5", "--out", out], capsys)[0] == OK
    code, text, _ = _run(["compute", out], capsys)
    assert code == OK and "k: 10" in text


def _native_index(family, G, ann):
    """Index by the family's own algorithm for Halin fixtures, by the oracle otherwise."""
    if "halin" in ann:
        return _solve("halin", G, detect(G, ann, "halin")[1])[0]
    return exact_strong_index(G)[0]


@pytest.mark.parametrize("family,expected", [
    ("mop", {"mop"}),
    ("cograph", {"mop", "cograph"}),
    ("dh", {"mop", "cograph", "dh"}),
    ("tree", {"mop", "cograph", "dh"}),
    ("halin", {"mop", "cograph", "dh", "halin"}),
    ("wheel", {"mop", "cograph", "dh", "halin"}),
])
def test_auto_detection_round_trip(family, expected):
    for seed in range(8):
        G, ann = generate(GenSpec(family, n=4 + seed, seed=seed))
        if G.m == 0:
            continue
        cls, data = detect(G, ann)
        assert cls in expected
        assert _solve(cls, G, data)[0] == _native_index(family, G, ann)


def test_bench_csv(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code, text, _ = _run(["bench", "--family", "mop", "--sizes", "50,100", "--seeds", "0,1",
                          "--repeat", "1", "--out", str(out)], capsys)
    assert code == OK
    rows = list(csv.DictReader(out.open()))
    assert tuple(rows[0].keys()) == BENCH_CSV_FIELDS
    assert [(r["n"], r["seed"]) for r in rows] == [("50", "0"), ("50", "1"), ("100", "0"), ("100", "1")]
    assert "median" in text


def test_bench_parallel_matches_serial():
    a = cmd_bench("dh", [40, 60], [0, 1], repeat=1, jobs=1)
    b = cmd_bench("dh", [40, 60], [0, 1], repeat=1, jobs=2)
    key = lambda rows: [(r["n"], r["seed"], r["m"], r["k"]) for r in rows]
    assert key(a) == key(b)
