"""Block partitions: the definitional oracle, refinement by strong bridges,
and the single-vertex block routines."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from ._flow import dom_forest, scc_split
from .dominators import NotStronglyConnectedError, dominator_tree
from .graph import Digraph, is_strongly_connected, reverse


@dataclass(frozen=True, eq=False)
class BlockPartition:
    """Partition into 2-edge-connected blocks, ids ordered by smallest member."""

    block_id: np.ndarray
    block_count: int
    stats: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_labels(cls, labels, stats: dict | None = None) -> "BlockPartition":
        labels = np.asarray(labels, dtype=np.int64)
        if labels.size == 0:
            return cls(labels, 0, stats or {})
        bid, count = K.canonical(labels)
        return cls(bid, int(count), stats or {})

    @property
    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for v, b in enumerate(self.block_id.tolist()):
            out[b].append(v)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlockPartition):
            return NotImplemented
        return self.block_count == other.block_count and np.array_equal(self.block_id, other.block_id)

    def __hash__(self):
        return hash(self.block_id.tobytes())


# ---------------------------------------------------------------- oracle

def _py_scc(n: int, edges: list[tuple[int, int]]) -> list[int]:
    """Kosaraju in plain Python; kept separate from the compiled Tarjan on purpose."""
    fwd: list[list[int]] = [[] for _ in range(n)]
    bwd: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        fwd[u].append(v)
        bwd[v].append(u)
    seen = [False] * n
    finish: list[int] = []
    for r in range(n):
        if seen[r]:
            continue
        seen[r] = True
        stack = [(r, iter(fwd[r]))]
        while stack:
            u, it = stack[-1]
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, iter(fwd[w])))
                    break
            else:
                stack.pop()
                finish.append(u)
    comp = [-1] * n
    c = 0
    for r in reversed(finish):
        if comp[r] != -1:
            continue
        comp[r] = c
        todo = [r]
        while todo:
            u = todo.pop()
            for w in bwd[u]:
                if comp[w] == -1:
                    comp[w] = c
                    todo.append(w)
        c += 1
    return comp


def blocks_oracle(g: Digraph) -> BlockPartition:
    """Refine the strong components by the components of G minus each edge occurrence."""
    edges = [(u, v) for u, v in g.edges if u != v]
    key = [(c,) for c in _py_scc(g.n, edges)]
    for i in range(len(edges)):
        comp = _py_scc(g.n, edges[:i] + edges[i + 1:])
        key = [k + (c,) for k, c in zip(key, comp)]
    ids: dict[tuple, int] = {}
    return BlockPartition.from_labels([ids.setdefault(k, len(ids)) for k in key])


# ---------------------------------------------------------------- refinement by strong bridges

def simple_2ecb(g: Digraph) -> BlockPartition:
    """Start from the strong components; refine once per strong bridge."""
    if g.n == 0:
        return BlockPartition.from_labels([])
    batch, _, comp = scc_split(g)
    fwd = dom_forest(batch).bridge
    bwd = dom_forest(batch.reversed()).bridge
    sb = np.union1d(fwd[fwd >= 0], bwd[bwd >= 0])
    labels, count = K.canonical(comp)
    off, eid = batch.out_csr
    pos = np.empty_like(eid)
    pos[eid] = np.arange(eid.shape[0], dtype=eid.dtype)
    mask = np.ones(batch.tails.shape[0], dtype=np.bool_)
    for e in sb:
        mask[pos[e]] = False
        lab, nlab = K.scc(batch.n, off, batch.out_adj, mask)
        mask[pos[e]] = True
        labels, count = K.refine(labels, lab, count, nlab)
    stats = {"dom_runs": 2 * len(batch.roots), "scc_runs": 1 + len(sb), "rounds": len(sb)}
    return BlockPartition.from_labels(labels, stats)


# ---------------------------------------------------------------- single-vertex blocks

def two_edge_connected_from(g: Digraph, v: int) -> frozenset[int]:
    """``v`` plus every vertex reached from ``v`` by two edge-disjoint paths."""
    if not is_strongly_connected(g):
        raise NotStronglyConnectedError("graph is not strongly connected")
    t = dominator_tree(g, v)
    ok = np.zeros(g.n, dtype=np.bool_)
    for w in t.order:
        p = t.parent[w]
        ok[w] = p < 0 or (ok[p] and not t.marked[w])
    return frozenset(np.flatnonzero(ok).tolist())


def block_of_vertex(g: Digraph, v: int) -> frozenset[int]:
    return two_edge_connected_from(g, v) & two_edge_connected_from(reverse(g), v)
