"""Command-line front end.

Exit status: 0 on success, 1 on a usage error, 2 when the input cannot be
read or does not fit the command, 3 when ``selftest`` finds a mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import asdict, dataclass

import numpy as np

from .algorithms import are_2ec, build_query
from .auxiliary import build_auxiliary_graphs, decompose_subtrees
from .certificate import sparse_certificate
from .dominators import (NotStronglyConnectedError, UnreachableVertexError, dominator_tree,
                         strong_bridge_ids)
from .estimator import ALGORITHMS
from .graph import GENERATORS, Digraph, GraphFormatError, format_graph, generate, parse_graph

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_SELFTEST = 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunReport:
    algo: str
    n: int
    m: int
    blocks: int
    ms: float
    dom_runs: int
    scc_runs: int
    rounds: int
    log_length: int | None = None


CSV_COLUMNS = ["algo", "n", "m", "blocks", "ms", "dom_runs", "scc_runs", "rounds"]


# ---------------------------------------------------------------- helpers

def _read(path: str) -> Digraph:
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return parse_graph(data)
    except GraphFormatError as exc:
        raise InputError(str(exc)) from exc


def _vertex(g: Digraph, label: int) -> int:
    """Dense id of an external label."""
    hit = np.flatnonzero(g.labels == label)
    if hit.size == 0:
        raise InputError(f"vertex {label} is not in the graph")
    return int(hit[0])


def _run(algo: str, g: Digraph):
    t = time.perf_counter()
    p = ALGORITHMS[algo](g)
    ms = (time.perf_counter() - t) * 1e3
    st = p.stats
    report = RunReport(algo, g.n, g.m, p.block_count, round(ms, 3), st.get("dom_runs", 0),
                       st.get("scc_runs", 0), st.get("rounds", 0))
    return p, report


def _block_lines(g: Digraph, blocks: list[list[int]]) -> list[list[int]]:
    lab = g.labels.tolist()
    return [[lab[v] for v in b] for b in blocks]


# ---------------------------------------------------------------- subcommands

def cmd_blocks(a, out):
    g = _read(a.graph)
    p, report = _run(a.algo, g)
    blocks = _block_lines(g, p.blocks)
    if a.json:
        json.dump({**asdict(report), "block_members": blocks}, out)
        out.write("\n")
    else:
        for b in blocks:
            out.write(" ".join(map(str, b)) + "\n")


def cmd_query(a, out):
    g = _read(a.graph)
    u, w = _vertex(g, a.u), _vertex(g, a.w)
    q = build_query(ALGORITHMS[a.algo](g))
    out.write("yes\n" if are_2ec(q, u, w) else "no\n")


def cmd_strong_bridges(a, out):
    g = _read(a.graph)
    lab = g.labels
    for e in strong_bridge_ids(g):
        out.write(f"{lab[g.tails[e]]} {lab[g.heads[e]]}\n")


def cmd_dom(a, out):
    g = _read(a.graph)
    t = dominator_tree(g, _vertex(g, a.source))
    lab = g.labels
    # one "parent child" line per non-start vertex, children ascending
    for w in range(g.n):
        if t.parent[w] >= 0:
            out.write(f"{lab[t.parent[w]]} {lab[w]}\n")


def cmd_aux(a, out):
    g = _read(a.graph)
    t = dominator_tree(g, _vertex(g, a.source))
    lab = g.labels.tolist()
    graphs = build_auxiliary_graphs(g, t, decompose_subtrees(t))
    for h in graphs:
        names = [str(lab[v]) for v in h.ordinary]
        names += [f"{lab[v]}'{'c' if tag == 'child' else 'p'}" for v, tag in h.auxiliary]
        out.write(f"# root={lab[h.root]} ordinary={len(h.ordinary)} "
                  f"auxiliary={len(h.auxiliary)} edges={len(h.edges)}\n")
        for (x, y), e, kind in zip(h.edges, h.provenance, h.kinds):
            out.write(f"{names[x]} {names[y]} {kind} {lab[g.tails[e]]}->{lab[g.heads[e]]}\n")


def cmd_certify(a, out):
    g = _read(a.graph)
    c = sparse_certificate(g)
    out.write(format_graph(c.graph))
    out.write(f"# edges={c.graph.m} n={g.n}\n")
    if a.verbose:
        sys.stderr.write(f"insertion log length {c.insertions}\n")


def cmd_gen(a, out):
    try:
        g = generate(a.kind, a.n, a.seed, a.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.write(format_graph(g, dimacs=a.dimacs))


def cmd_bench(a, out):
    try:
        sizes = [int(s) for s in a.sizes.split(",") if s]
    except ValueError as exc:
        raise UsageError(f"bad --sizes {a.sizes!r}") from exc
    if not sizes or min(sizes) <= 0:
        raise UsageError("--sizes needs positive integers")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    ALGORITHMS[a.algo](generate("random-strongly-connected", 8, a.seed))  # compile
    for n in sizes:
        g = generate("random-strongly-connected", n, a.seed, m=a.density * n)
        best = None
        for _ in range(a.repeat):
            _, r = _run(a.algo, g)
            if best is None or r.ms < best.ms:
                best = r
        w.writerow([getattr(best, c) for c in CSV_COLUMNS])
        out.flush()


def cmd_selftest(a, out):
    from .corpus import small_strong_digraphs

    checked = bad = 0
    for g in small_strong_digraphs(a.max_n):
        ref = ALGORITHMS["oracle"](g)
        for name in ("simple", "rec", "fast"):
            if ALGORITHMS[name](g) != ref:
                bad += 1
                out.write(f"MISMATCH {name} on {g.edges}\n")
        checked += 1
    out.write(f"checked {checked} graphs, {bad} mismatches\n")
    return EXIT_SELFTEST if bad else 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="digraph2ec", description="2-edge-connected blocks of directed graphs.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)
    algos = sorted(ALGORITHMS)

    def graph_arg(sp):
        sp.add_argument("graph", nargs="?", default="-",
                        help="graph file ('n m' edge list or 'p n m' DIMACS); '-' or omitted reads stdin")

    s = sub.add_parser("blocks", help="print the blocks, one per line")
    s.add_argument("--algo", choices=algos, default="fast")
    s.add_argument("--json", action="store_true", help="print a JSON run report instead")
    graph_arg(s)
    s.set_defaults(func=cmd_blocks)

    s = sub.add_parser("query", help="are u and w 2-edge-connected? prints yes or no")
    s.add_argument("u", type=int)
    s.add_argument("w", type=int)
    s.add_argument("--algo", choices=algos, default="fast")
    graph_arg(s)
    s.set_defaults(func=cmd_query)

    s = sub.add_parser("strong-bridges", help="print the strong bridges, one edge per line")
    graph_arg(s)
    s.set_defaults(func=cmd_strong_bridges)

    s = sub.add_parser("dom", help="print the dominator tree as 'parent child' lines")
    s.add_argument("--source", type=int, required=True)
    graph_arg(s)
    s.set_defaults(func=cmd_dom)

    s = sub.add_parser("aux", help="print the auxiliary graphs of the dominator tree")
    s.add_argument("--source", type=int, required=True)
    graph_arg(s)
    s.set_defaults(func=cmd_aux)

    s = sub.add_parser("certify", help="print a sparse subgraph with the same blocks")
    s.add_argument("-v", "--verbose", action="store_true", help="report the log length on stderr")
    graph_arg(s)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("gen", help="print a generated graph")
    s.add_argument("kind", choices=GENERATORS)
    s.add_argument("n", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--m", type=int, default=None, help="edge count for random graphs")
    s.add_argument("--dimacs", action="store_true")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="time an algorithm on random graphs, CSV output")
    s.add_argument("--algo", choices=algos, default="fast")
    s.add_argument("--sizes", default="100000,200000,400000,800000")
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--density", type=int, default=10, help="edges per vertex")
    s.add_argument("--repeat", type=int, default=1, help="runs per size; the fastest is reported")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("selftest", help="exhaustive oracle check on small graphs")
    s.add_argument("--max-n", type=int, default=4)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return a.func(a, out) or 0
    except UsageError as exc:
        sys.stderr.write(f"digraph2ec: error: {exc}\n")
        return EXIT_USAGE
    except (InputError, UnreachableVertexError, NotStronglyConnectedError, IndexError) as exc:
        sys.stderr.write(f"digraph2ec: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
