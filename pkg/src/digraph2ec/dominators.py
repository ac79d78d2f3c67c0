"""Dominator trees, flow-graph bridges and strong bridges."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .graph import Digraph, is_strongly_connected, reverse


class UnreachableVertexError(ValueError):
    def __init__(self, vertex: int, start: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is not reachable from start vertex {start}")


class NotStronglyConnectedError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class DominatorTree:
    """Dominator tree of G(start).

    ``parent[start] == -1``.  ``preorder`` runs over 1..n with children
    visited in ascending id; ``bridge_edges[w]`` is the id of the bridge
    entering ``w`` or -1, and ``marked`` flags the heads of bridges.
    """

    start: int
    parent: np.ndarray
    preorder: np.ndarray
    size: np.ndarray
    bridge_edges: np.ndarray
    depth: np.ndarray = field(repr=False)
    order: np.ndarray = field(repr=False)

    @property
    def marked(self) -> np.ndarray:
        return self.bridge_edges >= 0

    @property
    def pre0(self) -> np.ndarray:
        return self.preorder - 1

    def bridges(self, g: Digraph) -> list[tuple[int, int]]:
        ids = np.sort(self.bridge_edges[self.bridge_edges >= 0])
        return [(int(g.tails[e]), int(g.heads[e])) for e in ids]

    def is_ancestor(self, a: int, v: int) -> bool:
        """True when ``a`` dominates ``v`` (inclusive)."""
        return self.preorder[a] <= self.preorder[v] < self.preorder[a] + self.size[a]

    def ancestors(self, v: int) -> list[int]:
        out = []
        while v != -1:
            out.append(int(v))
            v = self.parent[v]
        return out


def dominator_tree(g: Digraph, s: int) -> DominatorTree:
    if not 0 <= s < g.n:
        raise IndexError(f"start vertex {s} out of range")
    roots = np.array([s], dtype=np.int64)
    idom, reached = K.dominators(g.n, g.out_csr[0], g.out_adj, g.in_csr[0], g.in_adj, roots)
    pre, size, depth, order, _, _ = K.tree_order(g.n, idom, roots)
    if reached != g.n:
        raise UnreachableVertexError(int(np.flatnonzero(pre < 0)[0]), s)
    bridge = K.flow_bridges(g.n, g.in_csr[0], g.in_csr[1], g.in_adj, idom, pre, size)
    return DominatorTree(int(s), idom, pre + 1, size, bridge, depth, order)


def flow_bridges(g: Digraph, t: DominatorTree) -> list[tuple[int, int]]:
    """Edges that every path from the start to their head must use."""
    ioff, ieid = g.in_csr
    bridge = K.flow_bridges(g.n, ioff, ieid, g.in_adj, t.parent, t.pre0, t.size)
    ids = np.sort(bridge[bridge >= 0])
    return [(int(g.tails[e]), int(g.heads[e])) for e in ids]


def strong_bridge_ids(g: Digraph, s: int = 0) -> np.ndarray:
    """Edge ids of the strong bridges, ascending."""
    if g.n < 2 or not is_strongly_connected(g):
        raise NotStronglyConnectedError("strong bridges need a strongly connected graph with >= 2 vertices")
    fwd = dominator_tree(g, s).bridge_edges
    bwd = dominator_tree(reverse(g), s).bridge_edges
    ids = np.union1d(fwd[fwd >= 0], bwd[bwd >= 0])
    return ids.astype(np.int64)


def strong_bridges(g: Digraph) -> list[tuple[int, int]]:
    return [(int(g.tails[e]), int(g.heads[e])) for e in strong_bridge_ids(g)]


def _reach(n: int, adj: list[list[int]], s: int, banned: int = -1) -> set[int]:
    if s == banned:
        return set()
    seen = {s}
    q = deque([s])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w != banned and w not in seen:
                seen.add(w)
                q.append(w)
    return seen


def dominators_oracle(g: Digraph, s: int) -> list[set[int]]:
    """Dominator sets by deleting each vertex in turn and testing reachability."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        if u != v:
            adj[u].append(v)
    full = _reach(g.n, adj, s)
    if len(full) != g.n:
        raise UnreachableVertexError(min(set(range(g.n)) - full), s)
    dom = [{s, w} for w in range(g.n)]
    for u in range(g.n):
        if u == s:
            continue
        cut = _reach(g.n, adj, s, banned=u)
        for w in range(g.n):
            if w != u and w not in cut:
                dom[w].add(u)
    return dom
