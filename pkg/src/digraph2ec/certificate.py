"""Independent spanning trees and the O(n)-edge certificate for the blocks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from ._flow import Batch, DomForest, dom_forest
from .algorithms import two_level
from .dominators import dominator_tree
from .graph import Digraph


@dataclass(frozen=True, eq=False)
class SpanningTreePair:
    """Two spanning trees of G(start) as parent arrays.

    ``B[v]``/``R[v]`` is the parent of ``v`` (-1 at the start) and
    ``B_edge[v]``/``R_edge[v]`` the id of the edge used.
    """

    start: int
    B: np.ndarray
    R: np.ndarray
    B_edge: np.ndarray
    R_edge: np.ndarray


@dataclass(frozen=True, eq=False)
class Certificate:
    log: np.ndarray        # original edge ids in insertion order, repeats allowed
    edge_ids: np.ndarray   # the deduplicated ids, ascending
    graph: Digraph

    @property
    def insertions(self) -> int:
        return int(self.log.shape[0])


def _ist(b: Batch, f: DomForest) -> tuple[np.ndarray, np.ndarray]:
    off, eid = b.out_csr
    err, lo, hi = K.ist_batch(b.n, b.tails, b.heads, off, eid, f.idom, f.pre, f.size,
                              f.depth, f.order, f.child_off, f.children)
    if err != K.OK:
        raise AssertionError(f"spanning tree construction failed (code {err})")
    return lo, hi


def independent_spanning_trees(g: Digraph, s: int) -> SpanningTreePair:
    dominator_tree(g, s)  # raises on unreachable vertices
    b = Batch(g.n, g.tails, g.heads, np.array([s], dtype=np.int64))
    lo, hi = _ist(b, dom_forest(b))
    B = np.full(g.n, -1, dtype=np.int64)
    R = np.full(g.n, -1, dtype=np.int64)
    B[lo >= 0] = g.tails[lo[lo >= 0]]
    R[hi >= 0] = g.tails[hi[hi >= 0]]
    return SpanningTreePair(int(s), B, R, lo, hi)


def _tree_path(parent: np.ndarray, v: int, s: int) -> list[int] | None:
    path = [v]
    for _ in range(parent.shape[0]):
        if v == s:
            return path
        v = int(parent[v])
        if v < 0:
            return None
        path.append(v)
    return None


def verify_independence(g: Digraph, s: int, pair: SpanningTreePair) -> bool:
    """Check both trees span G(s), meet only in dominators, and share only bridges."""
    t = dominator_tree(g, s)
    for P, E in ((pair.B, pair.B_edge), (pair.R, pair.R_edge)):
        if P.shape[0] != g.n or P[s] != -1:
            return False
        for v in range(g.n):
            if v == s:
                continue
            e = int(E[v])
            if not 0 <= e < g.m or g.heads[e] != v or g.tails[e] != P[v] or g.tails[e] == v:
                return False
    for v in range(g.n):
        pb = _tree_path(pair.B, v, s)
        pr = _tree_path(pair.R, v, s)
        if pb is None or pr is None:
            return False
        if set(pb) & set(pr) != set(t.ancestors(v)):
            return False
        if v != s and pair.B_edge[v] == pair.R_edge[v] and t.bridge_edges[v] != pair.B_edge[v]:
            return False
    return True


def sparse_certificate(g: Digraph) -> Certificate:
    """Subgraph with O(n) edges and the same blocks, harvested along the two-level pass.

    Logged, in order: two independent spanning trees of G(s) and a spanning
    tree of the reverse, per strong component; two independent spanning
    trees of every reversed level-1 auxiliary graph; forward and backward
    spanning trees of every final strong component.  Edges of auxiliary
    graphs are logged through their provenance, so every logged edge is an
    original edge in its original orientation.
    """
    if g.n == 0:
        return Certificate(np.zeros(0, np.int64), np.zeros(0, np.int64), g)
    tl = two_level(g)
    keep = tl.keep
    parts = []

    lo, hi = _ist(tl.batch, tl.f1)
    nonroot = lo >= 0
    parts += [keep[lo[nonroot]], keep[hi[nonroot]]]
    rb = tl.batch.reversed()
    roff, reid = rb.out_csr
    pedge, _ = K.bfs_tree(rb.n, rb.heads, roff, reid, rb.roots, np.ones(rb.tails.shape[0], np.bool_))
    parts.append(keep[pedge[pedge >= 0]])

    a1 = tl.a1
    if a1.n:
        lo, hi = _ist(tl.b2, tl.f2)
        nonroot = lo >= 0
        tree = np.concatenate([lo[nonroot], hi[nonroot]])
        parts.append(tl.orig_edge_1(tree))
        # an edge between two auxiliary vertices also pulls in the root's entering bridge
        pb = np.full(a1.count, -1, dtype=np.int64)
        pbe = np.flatnonzero(a1.ekind == K.PARENT_BRIDGE)
        pb[a1.vgid[a1.heads[pbe]]] = pbe
        both_aux = tree[(a1.vkind[a1.tails[tree]] != K.ORDINARY) & (a1.vkind[a1.heads[tree]] != K.ORDINARY)]
        if both_aux.size:
            parts.append(tl.orig_edge_1(pb[a1.vgid[a1.tails[both_aux]]]))

    a2 = tl.a2
    if a2.n:
        comp = tl.comp2
        csize = np.bincount(comp)
        first = np.full(csize.shape[0], a2.n, dtype=np.int64)
        np.minimum.at(first, comp, np.arange(a2.n, dtype=np.int64))
        roots = np.sort(first[csize >= 2])
        inside = tl.alive2 & (comp[a2.tails] == comp[a2.heads])
        for t_, h_ in ((a2.tails, a2.heads), (a2.heads, a2.tails)):
            off, eid = K.csr(a2.n, t_)
            pedge, _ = K.bfs_tree(a2.n, h_, off, eid, roots, inside)
            parts.append(tl.orig_edge_2(pedge[pedge >= 0]))

    log = np.concatenate(parts).astype(np.int64)
    ids = np.unique(log)
    cg = Digraph(g.n, g.tails[ids], g.heads[ids], g.labels)
    return Certificate(log, ids, cg)
