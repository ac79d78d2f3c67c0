"""Brute-force reference routines for the tests.

Everything here works from plain edge lists in pure Python (or networkx
max-flow) and shares no code with the package's compiled kernels.
"""

from __future__ import annotations

from collections import deque

import networkx as nx


def edge_list(g):
    return [(int(u), int(v)) for u, v in zip(g.tails.tolist(), g.heads.tolist())]


def reach(n, edges, s, skip_edge=-1, skip_vertex=-1):
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        if i != skip_edge and u != v:
            adj[u].append(v)
    if s == skip_vertex:
        return set()
    seen = {s}
    q = deque([s])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w != skip_vertex and w not in seen:
                seen.add(w)
                q.append(w)
    return seen


def scc_pairwise(n, edges, skip_edge=-1):
    """Canonical SCC labels from all-pairs reachability."""
    r = [reach(n, edges, v, skip_edge) for v in range(n)]
    label = [-1] * n
    k = 0
    for v in range(n):
        if label[v] == -1:
            for w in range(v, n):
                if w in r[v] and v in r[w]:
                    label[w] = k
            k += 1
    return label


def strongly_connected(n, edges, skip_edge=-1):
    return n >= 1 and max(scc_pairwise(n, edges, skip_edge)) == 0


def dominator_sets(n, edges, s):
    full = reach(n, edges, s)
    dom = [{w} | {s} for w in range(n)]
    for u in range(n):
        if u == s:
            continue
        cut = reach(n, edges, s, skip_vertex=u)
        for w in full:
            if w != u and w not in cut:
                dom[w].add(u)
    return dom


def flow_bridge_ids(n, edges, s):
    return sorted(i for i, (u, v) in enumerate(edges)
                  if u != v and v not in reach(n, edges, s, skip_edge=i))


def strong_bridge_ids(n, edges):
    return sorted(i for i, (u, v) in enumerate(edges)
                  if u != v and not strongly_connected(n, edges, skip_edge=i))


def blocks_by_maxflow(n, edges):
    """Canonical block labels from the definition: two edge-disjoint paths each way."""
    cap = nx.DiGraph()
    cap.add_nodes_from(range(n))
    for u, v in edges:
        if u == v:
            continue
        if cap.has_edge(u, v):
            cap[u][v]["capacity"] += 1
        else:
            cap.add_edge(u, v, capacity=1)

    def flow(a, b):
        return nx.maximum_flow_value(cap, a, b)

    label = [-1] * n
    k = 0
    for v in range(n):
        if label[v] != -1:
            continue
        label[v] = k
        for w in range(v + 1, n):
            if label[w] == -1 and flow(v, w) >= 2 and flow(w, v) >= 2:
                label[w] = k
        k += 1
    return label


def canonical(labels):
    ids = {}
    return [ids.setdefault(x, len(ids)) for x in labels]
