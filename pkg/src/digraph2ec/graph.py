"""Directed multigraph storage, parsing, generators and strong components."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K


class GraphFormatError(ValueError):
    """Malformed graph text.  ``line`` is 1-based, or None when not tied to a line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class Digraph:
    """Immutable directed multigraph on vertices ``0..n-1``.

    Edge ``e`` is ``(tails[e], heads[e])``.  Parallel edges and self-loops are
    stored as given; every traversal skips self-loops.  ``labels`` maps a
    dense id back to the external id used by the input file.
    """

    __slots__ = ("n", "tails", "heads", "labels", "__dict__")

    def __init__(self, n: int, tails: Sequence[int] | np.ndarray = (),
                 heads: Sequence[int] | np.ndarray = (), labels: np.ndarray | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        t = np.ascontiguousarray(tails, dtype=K.IT).reshape(-1)
        h = np.ascontiguousarray(heads, dtype=K.IT).reshape(-1)
        if t.shape != h.shape:
            raise ValueError("tails and heads differ in length")
        if t.size and (t.min() < 0 or h.min() < 0 or t.max() >= n or h.max() >= n):
            raise ValueError("edge endpoint out of range")
        t.flags.writeable = False
        h.flags.writeable = False
        self.n = int(n)
        self.tails = t
        self.heads = h
        if labels is None:
            labels = np.arange(n, dtype=np.int64)
        labels = np.asarray(labels)
        labels.flags.writeable = False
        self.labels = labels

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Digraph":
        arr = np.array(list(edges), dtype=np.int64).reshape(-1, 2)
        return cls(n, arr[:, 0], arr[:, 1])

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def m(self) -> int:
        return int(self.tails.shape[0])

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.tails.tolist(), self.heads.tolist()))

    @cached_property
    def out_csr(self) -> tuple[np.ndarray, np.ndarray]:
        return K.csr(self.n, self.tails)

    @cached_property
    def in_csr(self) -> tuple[np.ndarray, np.ndarray]:
        return K.csr(self.n, self.heads)

    @cached_property
    def out_adj(self) -> np.ndarray:
        return self.heads[self.out_csr[1]]

    @cached_property
    def in_adj(self) -> np.ndarray:
        return self.tails[self.in_csr[1]]

    def successors(self, v: int) -> list[int]:
        off, eid = self.out_csr
        return [int(self.heads[e]) for e in eid[off[v]:off[v + 1]] if self.heads[e] != v]

    def predecessors(self, v: int) -> list[int]:
        off, eid = self.in_csr
        return [int(self.tails[e]) for e in eid[off[v]:off[v + 1]] if self.tails[e] != v]

    @property
    def edge_mask(self) -> np.ndarray:
        return np.ones(self.m, dtype=np.bool_)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


class DigraphView:
    """A graph with one edge occurrence hidden.  The base graph is untouched."""

    def __init__(self, base: Digraph, removed: int):
        if not 0 <= removed < base.m:
            raise IndexError(f"edge index {removed} out of range for {base.m} edges")
        self.base = base
        self.removed = int(removed)

    @property
    def n(self) -> int:
        return self.base.n

    vertex_count = n

    @property
    def tails(self) -> np.ndarray:
        return self.base.tails

    @property
    def heads(self) -> np.ndarray:
        return self.base.heads

    @property
    def out_csr(self):
        return self.base.out_csr

    @property
    def out_adj(self):
        return self.base.out_adj

    @property
    def edge_mask(self) -> np.ndarray:
        mask = np.ones(self.base.m, dtype=np.bool_)
        mask[self.removed] = False
        return mask

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [e for i, e in enumerate(self.base.edges) if i != self.removed]


@dataclass(frozen=True)
class VertexPartition:
    part_id: np.ndarray
    part_count: int


def reverse(g: Digraph) -> Digraph:
    return Digraph(g.n, g.heads, g.tails, g.labels)


def remove_edge_view(g: Digraph, e: int) -> DigraphView:
    return DigraphView(g, e)


def strongly_connected_components(g: Digraph | DigraphView) -> VertexPartition:
    """Strong components; parts are numbered by smallest member."""
    off, eid = g.out_csr
    comp, _ = K.scc(g.n, off, g.out_adj, g.edge_mask[eid])
    part, count = K.canonical(comp)
    return VertexPartition(part, int(count))


def is_strongly_connected(g: Digraph | DigraphView) -> bool:
    return g.n >= 1 and strongly_connected_components(g).part_count == 1


def induced_subgraph(g: Digraph, vertices: Sequence[int]) -> tuple[Digraph, np.ndarray]:
    """Subgraph on ``vertices`` (renumbered in the given order) and the kept edge ids."""
    vs = np.asarray(vertices, dtype=np.int64)
    local = np.full(g.n, -1, dtype=np.int64)
    local[vs] = np.arange(vs.size)
    keep = np.flatnonzero((local[g.tails] >= 0) & (local[g.heads] >= 0))
    sub = Digraph(vs.size, local[g.tails[keep]], local[g.heads[keep]], g.labels[vs])
    return sub, keep


# ---------------------------------------------------------------- parsing

def _decode(text: bytes | str) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"non-ASCII input at byte {exc.start}") from None
    return text


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text: bytes | str) -> Digraph:
    """Read the plain ``n m`` edge list (0-based) or the ``p n m`` / ``a u v`` form (1-based)."""
    lines = _decode(text).splitlines()
    body = [(i + 1, ln.split()) for i, ln in enumerate(lines)]
    body = [(i, toks) for i, toks in body if toks and not toks[0].startswith(("#", "c"))]
    if not body:
        raise GraphFormatError("empty input: missing header", 1)
    hline, header = body[0]
    dimacs = header[0] == "p"
    if dimacs:
        # allow an optional problem tag, as in "p sp n m"
        nums = header[2:] if len(header) == 4 else header[1:]
        if len(nums) != 2:
            raise GraphFormatError("header must be 'p <n> <m>'", hline)
    else:
        nums = header
        if len(nums) != 2:
            raise GraphFormatError("header must be '<n> <m>'", hline)
    n = _int(nums[0], hline)
    m = _int(nums[1], hline)
    if n < 0 or m < 0:
        raise GraphFormatError("negative count in header", hline)
    rows = body[1:]
    if len(rows) != m:
        where = rows[m][0] if len(rows) > m else (rows[-1][0] if rows else hline)
        raise GraphFormatError(f"header announces {m} edges, found {len(rows)}", where)
    shift = 1 if dimacs else 0
    tails = np.empty(m, dtype=np.int64)
    heads = np.empty(m, dtype=np.int64)
    for k, (lineno, toks) in enumerate(rows):
        if dimacs:
            if toks[0] != "a" or len(toks) not in (3, 4):
                raise GraphFormatError("edge line must be 'a <u> <v>'", lineno)
            toks = toks[1:3]
        elif len(toks) != 2:
            raise GraphFormatError("edge line must be '<u> <v>'", lineno)
        u = _int(toks[0], lineno) - shift
        v = _int(toks[1], lineno) - shift
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range in {' '.join(toks)!r}", lineno)
        tails[k] = u
        heads[k] = v
    return Digraph(n, tails, heads, np.arange(n, dtype=np.int64) + shift)


def format_graph(g: Digraph, dimacs: bool | None = None) -> str:
    """Inverse of :func:`parse_graph`.  Labels decide the format unless given."""
    if dimacs is None:
        dimacs = bool(g.n) and int(g.labels[0]) == 1
    if dimacs:
        out = [f"p {g.n} {g.m}"]
        out += [f"a {u + 1} {v + 1}" for u, v in g.edges]
    else:
        out = [f"{g.n} {g.m}"]
        out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- generators

GENERATORS = ("cycle", "bidirected-clique", "random-strongly-connected")


def generate(kind: str, n: int, seed: int = 0, m: int | None = None) -> Digraph:
    if n <= 0:
        raise ValueError("generator needs n >= 1")
    if kind == "cycle":
        if n == 1:
            return Digraph(1)
        t = np.arange(n)
        return Digraph(n, t, (t + 1) % n)
    if kind == "bidirected-clique":
        u, v = np.nonzero(~np.eye(n, dtype=bool))
        return Digraph(n, u, v)
    if kind == "random-strongly-connected":
        if m is None:
            m = 2 * n
        total = max(m, n)
        rng = np.random.default_rng(seed)
        perm = rng.permutation(n)
        extra = total - n
        if n == 1:
            return Digraph(1, np.zeros(total, np.int64), np.zeros(total, np.int64))
        t = rng.integers(0, n, extra)
        # shift heads by a nonzero offset so no self-loops appear
        h = (t + rng.integers(1, n, extra)) % n
        tails = np.concatenate([perm, t])
        heads = np.concatenate([np.roll(perm, -1), h])
        return Digraph(n, tails, heads)
    raise ValueError(f"unknown generator {kind!r}; choose from {', '.join(GENERATORS)}")
