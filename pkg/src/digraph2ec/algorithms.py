"""Recursive and two-level block algorithms, and the constant-time query table."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from ._flow import Batch, DomForest, dom_forest, scc_split
from .auxiliary import AuxBatch, aux_batch
from .blocks import BlockPartition
from .graph import Digraph


# ---------------------------------------------------------------- recursive

def _has_real_below(f: DomForest, real: np.ndarray) -> np.ndarray:
    below = real.copy()
    for v in f.order[::-1]:
        p = f.idom[v]
        if p >= 0 and below[v]:
            below[p] = True
    return below


def rec_2ecb(g: Digraph) -> BlockPartition:
    """Split along the side with more separating bridges until nothing separates."""
    if g.n == 0:
        return BlockPartition.from_labels([])
    batch, _, comp = scc_split(g)
    labels = np.arange(g.n, dtype=np.int64)
    stats = {"dom_runs": 0, "scc_runs": 1, "rounds": 0}
    # work items: (n, tails, heads, original id of each vertex or -1)
    work = []
    for r in batch.roots.tolist():
        members = np.flatnonzero(comp == comp[r])
        if members.size < 2:
            continue
        local = np.full(g.n, -1, dtype=np.int64)
        local[members] = np.arange(members.size)
        sel = comp[batch.tails] == comp[r]
        work.append((members.size, local[batch.tails[sel]], local[batch.heads[sel]], members))
    while work:
        n, tails, heads, orig = work.pop()
        stats["rounds"] += 1
        real = orig >= 0
        s = int(np.flatnonzero(real)[0])
        fwd = Batch(n, tails, heads, np.array([s], dtype=np.int64))
        bwd = fwd.reversed()
        ff, fb = dom_forest(fwd), dom_forest(bwd)
        stats["dom_runs"] += 2
        b = int(np.count_nonzero((ff.bridge >= 0) & _has_real_below(ff, real)))
        br = int(np.count_nonzero((fb.bridge >= 0) & _has_real_below(fb, real)))
        if b == 0 and br == 0:
            labels[orig[real]] = orig[real].min()
            continue
        side, f = (bwd, fb) if br > b else (fwd, ff)
        ab = aux_batch(side, f, real, 2)
        for i in range(ab.count):
            v0, v1 = ab.voff[i], ab.voff[i + 1]
            e0, e1 = ab.eoff[i], ab.eoff[i + 1]
            src = ab.vsrc[v0:v1]
            sub_orig = np.where(ab.vkind[v0:v1] == K.ORDINARY, orig[src], -1)
            work.append((int(v1 - v0), ab.tails[e0:e1] - v0, ab.heads[e0:e1] - v0, sub_orig))
    return BlockPartition.from_labels(labels, stats)


# ---------------------------------------------------------------- two-level

@dataclass(eq=False)
class TwoLevel:
    """Everything computed on the way to the blocks.

    Level 1 decomposes G(s); level 2 decomposes every reversed level-1
    auxiliary graph from its root.  ``final`` holds the strong components
    of the level-2 graphs after the entering bridge of each non-root
    subtree is dropped.
    """

    g: Digraph
    batch: Batch
    keep: np.ndarray
    f1: DomForest
    a1: AuxBatch
    b2: Batch
    f2: DomForest
    a2: AuxBatch
    alive2: np.ndarray
    comp2: np.ndarray
    labels: np.ndarray
    stats: dict

    def orig_edge_1(self, e1: np.ndarray) -> np.ndarray:
        """Original edge ids behind level-1 auxiliary edges."""
        return self.keep[self.a1.prov[e1]]

    def orig_edge_2(self, e2: np.ndarray) -> np.ndarray:
        return self.orig_edge_1(self.a2.prov[e2])


def two_level(g: Digraph, start: int | None = None) -> TwoLevel:
    batch, keep, comp = scc_split(g, start)
    f1 = dom_forest(batch)
    a1 = aux_batch(batch, f1, np.ones(g.n, dtype=np.bool_), 2)
    b2 = a1.as_batch().reversed()
    f2 = dom_forest(b2)
    a2 = aux_batch(b2, f2, a1.vkind == K.ORDINARY, 2)
    alive2 = a2.ekind != K.PARENT_BRIDGE
    if np.any(np.bincount(a2.vgid[a2.tails[~alive2]], minlength=a2.count) > 1):
        raise AssertionError("a level-2 subtree has more than one entering bridge")
    off, eid = K.csr(a2.n, a2.tails)
    comp2, _ = K.scc(a2.n, off, a2.heads[eid], alive2[eid])

    labels = np.arange(g.n, dtype=np.int64) + a2.n
    both = np.flatnonzero(a2.vkind == K.ORDINARY)
    both = both[a1.vkind[a2.vsrc[both]] == K.ORDINARY]
    orig = a1.vsrc[a2.vsrc[both]]
    if np.unique(orig).size != orig.size:
        raise AssertionError("a vertex is ordinary at both levels more than once")
    labels[orig] = comp2[both]
    stats = {
        "dom_runs": int(len(batch.roots) + a1.count),
        "scc_runs": int(1 + a2.count),
        "rounds": 2,
    }
    return TwoLevel(g, batch, keep, f1, a1, b2, f2, a2, alive2, comp2, labels, stats)


def fast_2ecb(g: Digraph, start: int | None = None) -> BlockPartition:
    """Blocks from two nested decompositions and one strong-component pass.

    ``start`` picks the level-1 start vertex inside its strong component;
    the result does not depend on it.
    """
    if g.n == 0:
        return BlockPartition.from_labels([])
    if start is not None and not 0 <= start < g.n:
        raise IndexError(f"start vertex {start} out of range")
    tl = two_level(g, start)
    return BlockPartition.from_labels(tl.labels, tl.stats)


# ---------------------------------------------------------------- queries

class QueryStructure:
    """Per-vertex block ids; a query is one comparison."""

    __slots__ = ("block_id", "n")

    def __init__(self, block_id):
        self.block_id = list(map(int, block_id))
        self.n = len(self.block_id)


def build_query(p: BlockPartition) -> QueryStructure:
    return QueryStructure(p.block_id)


def are_2ec(q: QueryStructure, u: int, w: int) -> bool:
    n = q.n
    if not (0 <= u < n and 0 <= w < n):
        raise IndexError(f"vertex id out of range: ({u}, {w}) with n={n}")
    bid = q.block_id
    return bid[u] == bid[w]


def are_2ec_many(q: QueryStructure, us, ws) -> np.ndarray:
    """Vectorised :func:`are_2ec`."""
    bid = np.asarray(q.block_id, dtype=np.int64)
    us = np.asarray(us, dtype=np.int64)
    ws = np.asarray(ws, dtype=np.int64)
    if us.size and (min(us.min(), ws.min()) < 0 or max(us.max(), ws.max()) >= q.n):
        raise IndexError("vertex id out of range")
    return bid[us] == bid[ws]
