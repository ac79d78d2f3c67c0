"""Subtree decomposition of a dominator tree and the auxiliary graphs built on it."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from ._flow import Batch, DomForest
from .dominators import DominatorTree
from .graph import Digraph

EDGE_KINDS = {
    K.INTERNAL: "internal",
    K.CHILD_BRIDGE: "bridge-to-child",
    K.PARENT_BRIDGE: "bridge-from-parent",
    K.SHORT_A: "shortcut-a",
    K.SHORT_B: "shortcut-b",
    K.SHORT_C: "shortcut-c",
}


class AuxiliaryGraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SubtreeDecomposition:
    root_of: np.ndarray
    boundary: np.ndarray
    tree: DominatorTree


@dataclass(frozen=True, eq=False)
class AuxiliaryGraph:
    """One piece of the decomposition, over local ids.

    Local ids ``0..len(ordinary)-1`` are the ordinary vertices, followed by
    the auxiliary ones.  ``auxiliary`` lists ``(original id, tag)`` with tag
    ``"child"`` for a copy of a marked child and ``"parent"`` for the copy
    of the root's parent.  ``provenance[i]`` is an original edge id.
    """

    root: int
    ordinary: list[int]
    auxiliary: list[tuple[int, str]]
    edges: list[tuple[int, int]]
    provenance: list[int]
    kinds: list[str]
    parent_copy: int | None

    @property
    def vertex_count(self) -> int:
        return len(self.ordinary) + len(self.auxiliary)

    def as_digraph(self) -> Digraph:
        return Digraph.from_edges(self.vertex_count, self.edges)

    def local_id(self, v: int) -> int:
        return self.ordinary.index(v)


@dataclass(eq=False)
class AuxBatch:
    """All auxiliary graphs of one decomposition packed together (see build_aux)."""

    count: int
    groot: np.ndarray
    root_of: np.ndarray
    voff: np.ndarray
    vsrc: np.ndarray
    vkind: np.ndarray
    vgid: np.ndarray
    eoff: np.ndarray
    tails: np.ndarray
    heads: np.ndarray
    prov: np.ndarray
    ekind: np.ndarray

    @property
    def n(self) -> int:
        return int(self.vsrc.shape[0])

    def root_local(self) -> np.ndarray:
        """Batch id of each graph's root r (the first ordinary vertex is not r in general)."""
        pos = np.full(self.root_of.shape[0], -1, dtype=np.int64)
        ordinary = np.flatnonzero(self.vkind == K.ORDINARY)
        pos[self.vsrc[ordinary]] = ordinary
        return pos[self.groot]

    def as_batch(self) -> Batch:
        return Batch(self.n, self.tails, self.heads, self.root_local())


def aux_batch(b: Batch, f: DomForest, real: np.ndarray, min_real: int) -> AuxBatch:
    off, eid = b.out_csr
    ioff, ieid = b.in_csr
    res = K.build_aux(b.n, b.tails, b.heads, off, eid, b.out_adj, ioff, ieid, f.idom, f.pre, f.size,
                      f.order, f.bridge, b.is_root, real, min_real)
    err, bad = res[0], res[1]
    if err != K.OK:
        e = int(bad)
        raise AuxiliaryGraphError(
            f"edge {e} ({int(b.tails[e])}, {int(b.heads[e])}) breaks the cross-edge structure "
            "of the dominator tree; inputs are inconsistent")
    return AuxBatch(int(res[2]), *res[3:])


def decompose_subtrees(t: DominatorTree) -> SubtreeDecomposition:
    n = t.parent.shape[0]
    root_of = np.empty(n, dtype=np.int64)
    boundary = np.zeros(n, dtype=np.bool_)
    marked = t.marked
    for v in t.order:
        p = t.parent[v]
        if p < 0 or marked[v]:
            root_of[v] = v
        else:
            root_of[v] = root_of[p]
        if p >= 0 and marked[v]:
            boundary[p] = True
    return SubtreeDecomposition(root_of, boundary, t)


def compressed_marked_tree(t: DominatorTree, d: SubtreeDecomposition | None = None) -> dict[int, int]:
    """Parent of every marked vertex among the start and the marked vertices."""
    if d is None:
        d = decompose_subtrees(t)
    out = {}
    for v in np.flatnonzero(t.marked).tolist():
        out[v] = int(d.root_of[t.parent[v]])
    return out


def _check(g: Digraph, t: DominatorTree, d: SubtreeDecomposition):
    n = g.n
    if t.parent.shape[0] != n or d.root_of.shape[0] != n:
        raise AuxiliaryGraphError("tree, decomposition and graph disagree on vertex count")
    if t.order.shape[0] != n:
        raise AuxiliaryGraphError("dominator tree does not span the graph")
    if not np.array_equal(decompose_subtrees(t).root_of, d.root_of):
        raise AuxiliaryGraphError("decomposition does not match the tree's marks")
    be = t.bridge_edges
    marked = np.flatnonzero(be >= 0)
    if marked.size and (np.any(g.heads[be[marked]] != marked) or
                        np.any(g.tails[be[marked]] != t.parent[marked])):
        raise AuxiliaryGraphError("bridge marks do not match the graph's edges")


def unpack(ab: AuxBatch, g: int) -> AuxiliaryGraph:
    lo, hi = int(ab.voff[g]), int(ab.voff[g + 1])
    kinds = ab.vkind[lo:hi]
    src = ab.vsrc[lo:hi].tolist()
    ordinary = [s for s, k in zip(src, kinds) if k == K.ORDINARY]
    auxiliary = [(s, "child" if k == K.CHILD_COPY else "parent")
                 for s, k in zip(src, kinds) if k != K.ORDINARY]
    pc = np.flatnonzero(kinds == K.PARENT_COPY)
    e0, e1 = int(ab.eoff[g]), int(ab.eoff[g + 1])
    edges = list(zip((ab.tails[e0:e1] - lo).tolist(), (ab.heads[e0:e1] - lo).tolist()))
    return AuxiliaryGraph(
        root=int(ab.groot[g]),
        ordinary=ordinary,
        auxiliary=auxiliary,
        edges=edges,
        provenance=ab.prov[e0:e1].tolist(),
        kinds=[EDGE_KINDS[k] for k in ab.ekind[e0:e1].tolist()],
        parent_copy=int(pc[0]) if pc.size else None,
    )


def build_auxiliary_graphs(g: Digraph, t: DominatorTree, d: SubtreeDecomposition,
                           min_ordinary: int = 1) -> list[AuxiliaryGraph]:
    """Auxiliary graph of every subtree with at least ``min_ordinary`` vertices."""
    _check(g, t, d)
    b = Batch(g.n, g.tails, g.heads, np.array([t.start], dtype=np.int64))
    # self-loops stay in the edge list; the kernel skips them
    f = DomForest(t.parent, t.pre0, t.size, t.depth, t.order, None, None, t.bridge_edges)
    ab = aux_batch(b, f, np.ones(g.n, dtype=np.bool_), min_ordinary)
    return [unpack(ab, i) for i in range(ab.count)]
