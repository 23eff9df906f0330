"""Text formats: graphs with annotation blocks, colorings and DOT output.

A graph file starts with ``n m`` followed by ``m`` lines ``u v``. Lines
starting with ``#`` are comments, except the block markers ``#halin``,
``#dh`` and ``#cograph``, which open an annotation block of ``key: values``
lines:

    #halin
    tree: <edge ids of the tree>
    cycle: <leaves in cyclic order>
    #dh
    base: <a> <b>
    seq: <op> <vertex> <anchor>      (one line per step)
    #cograph
    cotree: <J|U ( ... ) nesting of vertices>
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .dh.cograph import Cotree
from .dh.sequence import OPS, PruningSequence, PruningStep
from .graph import Graph, GraphError, StrongColoring, build_graph
from .halin.structure import HalinAnnotation

BLOCKS = ("halin", "dh", "cograph")

PALETTE = ("red", "blue", "green", "orange", "purple", "brown", "magenta", "cyan",
           "gold", "navy", "darkgreen", "salmon", "gray", "olive", "pink", "turquoise")


class ParseError(GraphError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


@dataclass
class GraphFile:
    graph: Graph
    annotations: dict[str, Any] = field(default_factory=dict)


def _ints(words: list[str], line: int) -> list[int]:
    try:
        return [int(w) for w in words]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(words)!r}", line) from None


def parse_graph(text: str) -> GraphFile:
    header: list[int] | None = None
    pairs: list[tuple[int, int]] = []
    block: str | None = None
    fields: dict[str, list[tuple[int, list[str]]]] = {b: [] for b in BLOCKS}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            name = line[1:].strip()
            if name in BLOCKS:
                if header is None or len(pairs) < header[1]:
                    raise ParseError(f"block #{name} before the edge list ends", no)
                block = name
            continue
        if block is not None:
            key, sep, rest = line.partition(":")
            if not sep:
                raise ParseError(f"expected 'key: values' in #{block} block", no)
            fields[block].append((no, [key.strip()] + rest.split()))
            continue
        words = line.split()
        if len(words) != 2:
            raise ParseError("expected two integers", no)
        u, v = _ints(words, no)
        if header is None:
            if u < 0 or v < 0:
                raise ParseError("negative count in header", no)
            header = [u, v]
        elif len(pairs) == header[1]:
            raise ParseError(f"more than {header[1]} edges", no)
        else:
            pairs.append((u, v))
    if header is None:
        raise ParseError("empty input")
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"header says {m} edges, found {len(pairs)}")
    try:
        G = build_graph(n, pairs)
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    ann: dict[str, Any] = {}
    if fields["halin"]:
        ann["halin"] = _parse_halin(fields["halin"], G)
    if fields["dh"]:
        ann["dh"] = _parse_dh(fields["dh"], n)
    if fields["cograph"]:
        ann["cotree"] = _parse_cotree(fields["cograph"], n)
    return GraphFile(G, ann)


def _single(lines, key: str, block: str) -> tuple[int, list[str]]:
    found = [(no, w[1:]) for no, w in lines if w[0] == key]
    if len(found) != 1:
        raise ParseError(f"#{block} block needs exactly one '{key}:' line")
    return found[0]


def _parse_halin(lines, G: Graph) -> HalinAnnotation:
    for no, w in lines:
        if w[0] not in ("tree", "cycle"):
            raise ParseError(f"unknown key {w[0]!r} in #halin block", no)
    no, tree = _single(lines, "tree", "halin")
    tree_ids = _ints(tree, no)
    if any(not 0 <= e < G.m for e in tree_ids):
        raise ParseError("tree edge id out of range", no)
    no, cyc = _single(lines, "cycle", "halin")
    cycle = _ints(cyc, no)
    if any(not 0 <= v < G.n for v in cycle):
        raise ParseError("cycle vertex out of range", no)
    return HalinAnnotation(tuple(tree_ids), tuple(cycle))


def _parse_dh(lines, n: int) -> PruningSequence:
    no, b = _single(lines, "base", "dh")
    base = _ints(b, no)
    if len(base) != 2:
        raise ParseError("'base:' needs two vertices", no)
    steps = []
    for no, w in lines:
        if w[0] == "base":
            continue
        if w[0] != "seq" or len(w) != 4 or w[1] not in OPS:
            raise ParseError(f"expected 'seq: <{'|'.join(OPS)}> <vertex> <anchor>'", no)
        v, a = _ints(w[2:], no)
        steps.append(PruningStep(v, w[1], a))
    return PruningSequence(n, (base[0], base[1]), tuple(steps))


def _parse_cotree(lines, n: int) -> Cotree:
    no, words = _single(lines, "cotree", "cograph")
    toks = " ".join(words).replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def node() -> Cotree:
        nonlocal pos
        if pos >= len(toks):
            raise ParseError("cotree ends early", no)
        t = toks[pos]
        pos += 1
        if t in ("J", "U"):
            if pos >= len(toks) or toks[pos] != "(":
                raise ParseError(f"expected '(' after {t}", no)
            pos += 1
            kids = []
            while pos < len(toks) and toks[pos] != ")":
                kids.append(node())
            if pos >= len(toks):
                raise ParseError("unbalanced parentheses in cotree", no)
            pos += 1
            return Cotree("join" if t == "J" else "union", -1, tuple(kids))
        (v,) = _ints([t], no)
        if not 0 <= v < n:
            raise ParseError(f"cotree vertex {v} out of range", no)
        return Cotree("leaf", v, ())

    T = node()
    if pos != len(toks):
        raise ParseError("trailing tokens after cotree", no)
    return T


def format_cotree(T: Cotree) -> str:
    if T.kind == "leaf":
        return str(T.vertex)
    tag = "J" if T.kind == "join" else "U"
    return f"{tag}({' '.join(format_cotree(c) for c in T.children)})"


def format_graph(G: Graph, annotations: dict[str, Any] | None = None, comment: str = "") -> str:
    out = [f"# {line}" for line in comment.splitlines()]
    out.append(f"{G.n} {G.m}")
    out.extend(f"{u} {v}" for u, v in G.edges)
    ann = annotations or {}
    if "halin" in ann:
        h = ann["halin"]
        out += ["#halin", "tree: " + " ".join(map(str, h.tree_edges)),
                "cycle: " + " ".join(map(str, h.cycle_order))]
    if "dh" in ann:
        s = ann["dh"]
        out += ["#dh", f"base: {s.base[0]} {s.base[1]}"]
        out.extend(f"seq: {st.op} {st.vertex} {st.anchor}" for st in s.steps)
    if "cotree" in ann:
        out += ["#cograph", "cotree: " + format_cotree(ann["cotree"])]
    return "\n".join(out) + "\n"


def read_graph(path: str) -> GraphFile:
    try:
        with open(path, encoding="ascii") as fh:
            return parse_graph(fh.read())
    except UnicodeDecodeError as exc:
        raise ParseError(f"not ASCII: {exc}") from None


def write_graph(path: str, G: Graph, annotations: dict[str, Any] | None = None) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_graph(G, annotations))


def parse_coloring(text: str, m: int) -> StrongColoring:
    """``edge_id color`` lines, one per edge, ``#`` comments allowed."""
    colors = [-1] * m
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        if len(words) != 2:
            raise ParseError("expected 'edge_id color'", no)
        e, c = _ints(words, no)
        if not 0 <= e < m:
            raise ParseError(f"edge id {e} out of range", no)
        if c < 0:
            raise ParseError("negative color", no)
        if colors[e] >= 0:
            raise ParseError(f"edge {e} colored twice", no)
        colors[e] = c
    missing = [e for e in range(m) if colors[e] < 0]
    if missing:
        raise ParseError(f"{len(missing)} edges have no color, first {missing[0]}")
    return StrongColoring(tuple(colors))


def format_coloring(c: StrongColoring) -> str:
    return "".join(f"{e} {col}\n" for e, col in enumerate(c.colors))


def color_name(c: int) -> str:
    """Palette name for color index ``c``; past the palette, names repeat with a suffix."""
    base = PALETTE[c % len(PALETTE)]
    return base if c < len(PALETTE) else f"{base}{c // len(PALETTE)}"


def format_dot(G: Graph, c: StrongColoring | None = None, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    out.extend(f"  {v};" for v in range(G.n))
    for e, (u, v) in enumerate(G.edges):
        if c is None:
            out.append(f"  {u} -- {v};")
        else:
            col = c.colors[e]
            out.append(f'  {u} -- {v} [color="{color_name(col)}", label="{col}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def read_text(path: str) -> str:
    with open(path, encoding="ascii") as fh:
        return fh.read()


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)

