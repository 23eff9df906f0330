"""Command line: compute, verify, generate, oracle and bench.

Exit codes: 0 success, 2 parse error, 3 class mismatch, 4 coloring
violation, 5 oracle budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import gc
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable

from .dh.cograph import NotCographError, cograph_strong_index, cotree_graph, recognize_cograph
from .dh.index import dh_clique_number, dh_strong_index
from .dh.recognition import recognize_dh
from .dh.sequence import replay_sequence
from .generators import FAMILIES, GenSpec, generate
from .graph import Graph, GraphError, StrongColoring
from .halin.cubic import cubic_halin_index
from .halin.general import halin_index
from .halin.structure import HalinAnnotation, validate_halin
from .io import (ParseError, format_coloring, format_dot, format_graph, parse_coloring,
                 read_graph, read_text, write_text)
from .oracle import DEFAULT_BUDGET, OracleBudgetError, exact_strong_index, verify_strong_coloring
from .outerplanar import extended_triangle_phi, mop_strong_index, recognize_mop

OK, PARSE, MISMATCH, VIOLATION, BUDGET = 0, 2, 3, 4, 5

CLASSES = ("auto", "halin", "cubic-halin", "dh", "cograph", "mop")
AUTO_ORDER = ("mop", "cograph", "dh", "halin")

# benchmark defaults for random distance-hereditary graphs: mostly pendant
# steps, and no twins on anchors of degree 8 or more, so m stays linear in n
BENCH_DH_PROBS = (0.6, 0.2, 0.2)
BENCH_DH_TWIN_CAP = 8
BENCH_CSV_FIELDS = ("family", "n", "m", "seed", "class", "k", "algo", "micros")


class CliError(Exception):
    def __init__(self, code: int, msg: str):
        self.code = code
        super().__init__(msg)


@dataclass
class RunReport:
    input: str
    cls: str
    k: int
    algo: str
    seconds: float
    certificate: str | None = None

    def lines(self) -> list[str]:
        out = [f"input: {self.input}", f"class: {self.cls}", f"k: {self.k}",
               f"algo: {self.algo}", f"seconds: {self.seconds:.6f}"]
        if self.certificate:
            out.append(f"certificate: {self.certificate}")
        return out


def _is_cubic(G: Graph) -> bool:
    return all(len(a) == 3 for a in G.adj)


def _prepare(cls: str, G: Graph, ann: dict[str, Any]) -> Any:
    """Validate ``G`` as ``cls``; return the structure the algorithm needs.

    Raises :class:`GraphError` when ``G`` is not in the class.
    """
    if cls == "mop":
        return recognize_mop(G)
    if cls == "cograph":
        T = ann.get("cotree")
        if T is None:
            return recognize_cograph(G)
        if cotree_graph(T, G.n).edge_set() != G.edge_set():
            raise GraphError("cotree annotation does not describe this graph")
        return T
    if cls == "dh":
        seq = ann.get("dh")
        if seq is None:
            return recognize_dh(G)
        if seq.n != G.n or replay_sequence(seq).edge_set() != G.edge_set():
            raise GraphError("#dh sequence does not rebuild this graph")
        return seq
    if cls in ("halin", "cubic-halin"):
        h: HalinAnnotation | None = ann.get("halin")
        if h is None:
            raise GraphError("halin class needs a #halin annotation block")
        validate_halin(G, h)
        if cls == "cubic-halin" and not _is_cubic(G):
            raise GraphError("graph is not cubic")
        return h
    raise GraphError(f"unknown class {cls!r}")


def _solve(cls: str, G: Graph, data: Any) -> tuple[int, StrongColoring, str]:
    if cls == "mop":
        k, c = mop_strong_index(G, data)
        return k, c, "mop-extended-triangle"
    if cls == "cograph":
        k, c = cograph_strong_index(G, data)
        return k, c, "cograph-cotree"
    if cls == "dh":
        k, c = dh_strong_index(G, data)
        return k, c, "dh-clique-dp"
    if cls == "cubic-halin" or _is_cubic(G):
        k, c = cubic_halin_index(G, data)
        return k, c, "halin-cubic-dp"
    k, c = halin_index(G, data)
    return k, c, "halin-type-dp"


def detect(G: Graph, ann: dict[str, Any], cls: str = "auto") -> tuple[str, Any]:
    """Class of ``G`` and its validated structure; auto mode tries mop, cograph, dh, halin."""
    if cls != "auto":
        try:
            return cls, _prepare(cls, G, ann)
        except GraphError as exc:
            raise CliError(MISMATCH, f"not {cls}: {exc}") from None
    reasons = []
    for c in AUTO_ORDER:
        if c == "halin" and "halin" not in ann:
            reasons.append("halin: no annotation")
            continue
        try:
            return c, _prepare(c, G, ann)
        except GraphError as exc:
            reasons.append(f"{c}: {exc}")
    raise CliError(MISMATCH, "no class matches (" + "; ".join(reasons) + ")")


def _load(path: str):
    try:
        return read_graph(path)
    except (ParseError, OSError) as exc:
        raise CliError(PARSE, f"{path}: {exc}") from None


def cmd_compute(path: str, cls: str = "auto", emit_coloring: str | None = None,
                emit_dot: str | None = None) -> RunReport:
    gf = _load(path)
    G = gf.graph
    t0 = time.perf_counter()
    found, data = detect(G, gf.annotations, cls)
    k, c, algo = _solve(found, G, data)
    seconds = time.perf_counter() - t0
    v = verify_strong_coloring(G, c)
    if v is not None or c.k != k:
        raise CliError(VIOLATION, f"internal error, certificate rejected: {v}")
    if emit_coloring:
        write_text(emit_coloring, format_coloring(c))
    if emit_dot:
        write_text(emit_dot, format_dot(G, c))
    return RunReport(path, found, k, algo, seconds, emit_coloring)


def cmd_verify(graph_path: str, coloring_path: str) -> str:
    G = _load(graph_path).graph
    try:
        c = parse_coloring(read_text(coloring_path), G.m)
    except (ParseError, OSError) as exc:
        raise CliError(PARSE, f"{coloring_path}: {exc}") from None
    v = verify_strong_coloring(G, c)
    if v is not None:
        e, f = G.edges[v.e], G.edges[v.f]
        raise CliError(VIOLATION, f"violation: edge {v.e} {e} and edge {v.f} {f} "
                                  f"both have color {c.colors[v.e]} ({v.reason})")
    return f"ok: {c.used()} colors on {G.m} edges"


def cmd_oracle(path: str, budget: int = DEFAULT_BUDGET, emit_coloring: str | None = None) -> RunReport:
    G = _load(path).graph
    t0 = time.perf_counter()
    try:
        k, c = exact_strong_index(G, budget=budget)
    except OracleBudgetError as exc:
        raise CliError(BUDGET, f"oracle budget exhausted: {exc}") from None
    seconds = time.perf_counter() - t0
    if emit_coloring:
        write_text(emit_coloring, format_coloring(c))
    return RunReport(path, "any", k, "oracle", seconds, emit_coloring)


def _bench_spec(family: str, n: int, seed: int) -> GenSpec:
    if family == "dh":
        return GenSpec(family, n=n, seed=seed, probs=BENCH_DH_PROBS, twin_cap=BENCH_DH_TWIN_CAP)
    return GenSpec(family, n=n, seed=seed)


BENCH_FAMILIES: dict[str, tuple[str, str, Callable]] = {
    # family: (class, algo, index computation on (graph, annotations))
    "mop": ("mop", "mop-extended-triangle",
            lambda G, ann: extended_triangle_phi(G, recognize_mop(G))[0]),
    "dh": ("dh", "dh-clique-dp", lambda G, ann: dh_clique_number(G)),
    "cograph": ("cograph", "cograph-cotree", lambda G, ann: cograph_strong_index(G)[0]),
    "cubic_halin": ("cubic-halin", "halin-cubic-dp",
                    lambda G, ann: cubic_halin_index(G, ann["halin"])[0]),
    "halin": ("halin", "halin-type-dp", lambda G, ann: halin_index(G, ann["halin"])[0]),
}


def bench_one(family: str, n: int, seed: int, repeat: int = 3) -> dict[str, Any]:
    """Generate one instance and time its index computation; median of ``repeat`` runs."""
    cls, algo, fn = BENCH_FAMILIES[family]
    G, ann = generate(_bench_spec(family, n, seed))
    times = []
    k = -1
    for _ in range(repeat):
        gc.collect()
        gc.disable()
        try:
            t0 = time.perf_counter()
            k = fn(G, ann)
            times.append(time.perf_counter() - t0)
        finally:
            gc.enable()
    return {"family": family, "n": n, "m": G.m, "seed": seed, "class": cls, "k": k,
            "algo": algo, "micros": round(statistics.median(times) * 1e6)}


def cmd_bench(family: str, sizes: list[int], seeds: list[int], repeat: int = 3,
              jobs: int = 1, out: str | None = None) -> list[dict[str, Any]]:
    if family not in BENCH_FAMILIES:
        raise CliError(PARSE, f"bench family must be one of {', '.join(BENCH_FAMILIES)}")
    tasks = [(family, n, s, repeat) for n in sizes for s in seeds]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(bench_one, *zip(*tasks)))
    else:
        rows = [bench_one(*t) for t in tasks]
    rows.sort(key=lambda r: (r["family"], r["n"], r["seed"]))
    if out:
        with open(out, "w", newline="", encoding="ascii") as fh:
            w = csv.DictWriter(fh, fieldnames=BENCH_CSV_FIELDS)
            w.writeheader()
            w.writerows(rows)
    return rows


def size_medians(rows: list[dict[str, Any]]) -> dict[int, float]:
    """Median time in seconds per size."""
    by: dict[int, list[int]] = {}
    for r in rows:
        by.setdefault(r["n"], []).append(r["micros"])
    return {n: statistics.median(v) / 1e6 for n, v in sorted(by.items())}


def _int_list(s: str) -> list[int]:
    try:
        return [int(float(x)) for x in s.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strongcolor", description="Strong chromatic index of special graph classes.")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("compute", help="strong chromatic index with a certificate")
    c.add_argument("path")
    c.add_argument("--class", dest="cls", choices=CLASSES, default="auto")
    c.add_argument("--emit-coloring", metavar="PATH")
    c.add_argument("--emit-dot", metavar="PATH")

    v = sub.add_parser("verify", help="check a coloring file against a graph")
    v.add_argument("graph")
    v.add_argument("coloring")

    g = sub.add_parser("generate", help="write a seeded instance of a family")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--dx", type=int, default=3)
    g.add_argument("--dy", type=int, default=3)
    g.add_argument("--max-degree", type=int, default=6)
    g.add_argument("--out", metavar="PATH")

    o = sub.add_parser("oracle", help="exact index by exhaustive search")
    o.add_argument("path")
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    o.add_argument("--emit-coloring", metavar="PATH")

    b = sub.add_parser("bench", help="time the index computation over sizes and seeds")
    b.add_argument("--family", choices=sorted(BENCH_FAMILIES), required=True)
    b.add_argument("--sizes", type=_int_list, required=True)
    b.add_argument("--seeds", type=_int_list, default=[0])
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--out", metavar="CSV")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "compute":
            print("\n".join(cmd_compute(args.path, args.cls, args.emit_coloring, args.emit_dot).lines()))
        elif args.cmd == "verify":
            print(cmd_verify(args.graph, args.coloring))
        elif args.cmd == "generate":
            try:
                G, ann = generate(GenSpec(args.family, n=args.n, seed=args.seed, dx=args.dx,
                                          dy=args.dy, max_degree=args.max_degree))
            except GraphError as exc:
                raise CliError(PARSE, str(exc)) from None
            text = format_graph(G, ann, f"{args.family} n={args.n} seed={args.seed}")
            if args.out:
                write_text(args.out, text)
            else:
                sys.stdout.write(text)
        elif args.cmd == "oracle":
            print("\n".join(cmd_oracle(args.path, args.budget, args.emit_coloring).lines()))
        else:
            try:
                rows = cmd_bench(args.family, args.sizes, args.seeds, args.repeat, args.jobs, args.out)
            except GraphError as exc:
                raise CliError(PARSE, str(exc)) from None
            w = csv.DictWriter(sys.stdout, fieldnames=BENCH_CSV_FIELDS)
            w.writeheader()
            w.writerows(rows)
            for n, sec in size_medians(rows).items():
                print(f"# n={n} median {sec:.4f} s")
    except CliError as exc:
        print(exc, file=sys.stderr)
        return exc.code
    return OK


if __name__ == "__main__":
    sys.exit(main())
