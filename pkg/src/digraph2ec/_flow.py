"""Batched flow graphs: several disjoint flow graphs packed into one edge array."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels as K
from .graph import Digraph


@dataclass(eq=False)
class Batch:
    n: int
    tails: np.ndarray
    heads: np.ndarray
    roots: np.ndarray

    @cached_property
    def out_csr(self):
        return K.csr(self.n, self.tails)

    @cached_property
    def in_csr(self):
        return K.csr(self.n, self.heads)

    @cached_property
    def out_adj(self):
        return self.heads[self.out_csr[1]]

    @cached_property
    def in_adj(self):
        return self.tails[self.in_csr[1]]

    def reversed(self) -> "Batch":
        return Batch(self.n, self.heads, self.tails, self.roots)

    @property
    def is_root(self) -> np.ndarray:
        flag = np.zeros(self.n, dtype=np.bool_)
        flag[self.roots] = True
        return flag


@dataclass(eq=False)
class DomForest:
    idom: np.ndarray
    pre: np.ndarray
    size: np.ndarray
    depth: np.ndarray
    order: np.ndarray
    child_off: np.ndarray
    children: np.ndarray
    bridge: np.ndarray


def dom_forest(b: Batch) -> DomForest:
    off, eid = b.out_csr
    ioff, ieid = b.in_csr
    idom, reached = K.dominators(b.n, off, b.out_adj, ioff, b.in_adj, b.roots)
    if reached != b.n:
        raise AssertionError("batch flow graph has unreachable vertices")
    pre, size, depth, order, child_off, children = K.tree_order(b.n, idom, b.roots)
    bridge = K.flow_bridges(b.n, ioff, ieid, b.in_adj, idom, pre, size)
    return DomForest(idom, pre, size, depth, order, child_off, children, bridge)


def scc_split(g: Digraph, start: int | None = None) -> tuple[Batch, np.ndarray, np.ndarray]:
    """Drop self-loops and edges between strong components.

    Returns the batch (same vertex ids, one flow graph per component, rooted
    at its smallest vertex or at ``start`` for the component holding it),
    the original ids of the kept edges, and the component of every vertex.
    """
    off, _ = g.out_csr
    comp, k = K.scc(g.n, off, g.out_adj, np.ones(g.m, dtype=np.bool_))
    keep = np.flatnonzero((comp[g.tails] == comp[g.heads]) & (g.tails != g.heads))
    roots = np.full(k, g.n, dtype=np.int64)
    np.minimum.at(roots, comp, np.arange(g.n, dtype=np.int64))
    if start is not None:
        roots[comp[start]] = start
    roots = np.sort(roots)
    if keep.shape[0] == g.m:
        # nothing dropped: share the arrays and adjacency already built for g
        b = Batch(g.n, g.tails, g.heads, roots)
        b.__dict__.update(out_csr=g.out_csr, in_csr=g.in_csr, out_adj=g.out_adj)
        return b, keep, comp
    return Batch(g.n, g.tails[keep], g.heads[keep], roots), keep, comp
