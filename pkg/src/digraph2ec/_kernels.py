"""Compiled array kernels.

Every kernel works on flat int32 arrays: ``tails[e]``/``heads[e]`` describe
edge ``e``, and CSR indexes (``off``, ``eid``) list edge ids grouped by tail
(out-adjacency) or by head (in-adjacency), ascending by edge id inside each
group; ``adj``/``iadj`` hold the other endpoint in that same order.  Several
flow graphs can be packed into one array set ("a batch");
kernels that take a ``roots`` array treat each root as the start of its own
flow graph, and no edge may join two graphs of a batch.
"""

import numpy as np
from numba import njit

# index dtype for every vertex- and edge-indexed array; halves memory traffic
IT = np.int32

# edge kinds produced by build_aux
INTERNAL = 0
CHILD_BRIDGE = 1   # (v, w') where w is a marked child of boundary vertex v
PARENT_BRIDGE = 2  # (d(r)', r)
SHORT_A = 3        # (u, d(r)')
SHORT_B = 4        # (z', v)
SHORT_C = 5        # (z', d(r)')

# vertex kinds produced by build_aux
ORDINARY = 0
CHILD_COPY = 1
PARENT_COPY = 2

# error codes returned by build_aux / ist_batch
OK = 0
ERR_CROSS_EDGE = 1
ERR_NO_Z = 2
ERR_STUCK = 3
ERR_UNREACHED = 4


@njit(cache=True)
def csr(n, keys):
    """Counting sort of edge ids by ``keys``; stable, so ids stay ascending."""
    m = keys.shape[0]
    off = np.zeros(n + 1, IT)
    for e in range(m):
        off[keys[e] + 1] += 1
    for i in range(n):
        off[i + 1] += off[i]
    pos = off[:-1].copy()
    idx = np.empty(m, IT)
    for e in range(m):
        k = keys[e]
        idx[pos[k]] = e
        pos[k] += 1
    return off, idx


@njit(cache=True)
def scc(n, off, adj, alive):
    """Iterative Tarjan over out-adjacency ``adj`` (heads in CSR order).

    ``alive`` is aligned with ``adj``; dead positions are skipped.
    """
    # a finished vertex gets index DONE, so one load tells "unvisited",
    # "on the stack" and "in a finished component" apart
    DONE = np.iinfo(IT).max
    index = np.full(n, -1, IT)
    low = np.zeros(n, IT)
    stk = np.empty(n, IT)
    cs_v = np.empty(n, IT)
    cs_i = np.empty(n, IT)
    comp = np.full(n, -1, IT)
    ncomp = 0
    counter = 0
    sp = 0
    for r in range(n):
        if index[r] != -1:
            continue
        top = 0
        cs_v[0] = r
        cs_i[0] = off[r]
        index[r] = counter
        low[r] = counter
        counter += 1
        stk[sp] = r
        sp += 1
        while top >= 0:
            v = cs_v[top]
            i = cs_i[top]
            if i < off[v + 1]:
                cs_i[top] = i + 1
                if not alive[i]:
                    continue
                w = adj[i]
                if index[w] == -1:
                    index[w] = counter
                    low[w] = counter
                    counter += 1
                    stk[sp] = w
                    sp += 1
                    top += 1
                    cs_v[top] = w
                    cs_i[top] = off[w]
                elif index[w] < low[v]:
                    low[v] = index[w]
            else:
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        x = stk[sp]
                        index[x] = DONE
                        comp[x] = ncomp
                        if x == v:
                            break
                    ncomp += 1
                top -= 1
                if top >= 0:
                    u = cs_v[top]
                    if low[v] < low[u]:
                        low[u] = low[v]
    return comp, ncomp


@njit(cache=True)
def _eval(v, al, cstack):
    """Smallest label on the linked path above ``v`` (root excluded), compressing it.

    ``al[v]`` holds (ancestor link, label) side by side so one miss fetches both.
    """
    if al[v, 0] == -1:
        return al[v, 1]
    sp = 0
    x = v
    while al[al[x, 0], 0] != -1:
        cstack[sp] = x
        sp += 1
        x = al[x, 0]
    while sp > 0:
        sp -= 1
        y = cstack[sp]
        a = al[y, 0]
        if al[a, 1] < al[y, 1]:
            al[y, 1] = al[a, 1]
        al[y, 0] = al[a, 0]
    return al[v, 1]


@njit(cache=True)
def dominators(n, off, adj, ioff, iadj, roots):
    """Immediate dominators of a batch of flow graphs.

    Semidominators by path compression, then immediate dominators by
    climbing from the DFS parent (the SEMI-NCA variant).  All work after
    the search runs on DFS numbers for locality.  Returns ``idom`` (-1 for
    roots and unreached vertices) and the number of reached vertices.
    """
    dfn = np.full(n, -1, IT)
    vert = np.empty(n, IT)
    par = np.full(n, -1, IT)
    sv = np.empty(n, IT)
    si = np.empty(n, IT)
    N = 0
    for root in roots:
        if dfn[root] != -1:
            continue
        dfn[root] = N
        vert[N] = root
        N += 1
        top = 0
        sv[0] = root
        si[0] = off[root]
        while top >= 0:
            v = sv[top]
            i = si[top]
            if i < off[v + 1]:
                si[top] = i + 1
                w = adj[i]
                if dfn[w] == -1:
                    dfn[w] = N
                    vert[N] = w
                    par[N] = dfn[v]
                    N += 1
                    top += 1
                    sv[top] = w
                    si[top] = off[w]
            else:
                top -= 1
    # predecessor lists in DFS numbering; -1 marks an unreached tail
    poff = np.zeros(N + 1, IT)
    for k in range(N):
        w = vert[k]
        poff[k + 1] = poff[k] + ioff[w + 1] - ioff[w]
    pred = np.empty(poff[N], IT)
    for k in range(N):
        w = vert[k]
        q = poff[k]
        for j in range(ioff[w], ioff[w + 1]):
            pred[q] = dfn[iadj[j]]
            q += 1
    al = np.empty((N, 2), IT)
    al[:, 0] = -1
    al[:, 1] = np.arange(N)
    semi = np.arange(N).astype(IT)
    cstack = np.empty(N, IT)
    for w in range(N - 1, 0, -1):
        p = par[w]
        if p == -1:
            continue
        sw = w
        for j in range(poff[w], poff[w + 1]):
            v = pred[j]
            if v == w or v < 0:
                continue
            u = _eval(v, al, cstack)
            if u < sw:
                sw = u
        semi[w] = sw
        al[w, 1] = sw
        al[w, 0] = p
    dom = np.full(N, -1, IT)
    for w in range(N):
        p = par[w]
        if p == -1:
            continue
        d = p
        while d > semi[w]:
            d = dom[d]
        dom[w] = d
    idom = np.full(n, -1, IT)
    for w in range(N):
        if dom[w] >= 0:
            idom[vert[w]] = vert[dom[w]]
    return idom, N


@njit(cache=True)
def tree_order(n, parent, roots):
    """Preorder of a forest, children visited in ascending id.

    Returns (pre, size, depth, order, child_off, children), ``pre`` 0-based.
    Vertices not below any root get ``pre == -1``.
    """
    keys = np.empty(n, IT)
    for v in range(n):
        keys[v] = parent[v] if parent[v] >= 0 else n
    child_off, children = csr(n + 1, keys)
    pre = np.full(n, -1, IT)
    size = np.ones(n, IT)
    depth = np.zeros(n, IT)
    order = np.empty(n, IT)
    stack = np.empty(n, IT)
    cnt = 0
    for root in roots:
        sp = 0
        stack[0] = root
        sp = 1
        while sp > 0:
            sp -= 1
            v = stack[sp]
            pre[v] = cnt
            order[cnt] = v
            cnt += 1
            for j in range(child_off[v + 1] - 1, child_off[v] - 1, -1):
                c = children[j]
                depth[c] = depth[v] + 1
                stack[sp] = c
                sp += 1
    for k in range(cnt - 1, -1, -1):
        v = order[k]
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    return pre, size, depth, order[:cnt], child_off[: n + 1], children


@njit(cache=True)
def flow_bridges(n, ioff, ieid, iadj, idom, pre, size):
    """Bridge entering each vertex (edge id) or -1.

    (idom(w), w) is a bridge iff it is the only edge entering w whose tail
    lies outside the dominator subtree of w.
    """
    bridge = np.full(n, -1, IT)
    for w in range(n):
        if idom[w] < 0:
            continue
        cnt = 0
        last = -1
        last_tail = -1
        lo = pre[w]
        hi = pre[w] + size[w]
        for j in range(ioff[w], ioff[w + 1]):
            u = iadj[j]
            if u == w:
                continue
            if lo <= pre[u] < hi:
                continue
            cnt += 1
            last = ieid[j]
            last_tail = u
            if cnt > 1:
                break
        if cnt == 1 and last_tail == idom[w]:
            bridge[w] = last
    return bridge


@njit(cache=True)
def refine(old, lab, nold, nlab):
    """Bucket sort over (old, lab) pairs; ids of the new parts follow key order."""
    n = old.shape[0]
    # LSD radix: by lab, then stably by old
    off1, idx1 = csr(nlab, lab)
    keys2 = np.empty(n, IT)
    for i in range(n):
        keys2[i] = old[idx1[i]]
    off2, idx2 = csr(nold, keys2)
    out = np.empty(n, IT)
    cnt = -1
    po = -1
    pl = -1
    for i in range(n):
        v = idx1[idx2[i]]
        if old[v] != po or lab[v] != pl:
            cnt += 1
            po = old[v]
            pl = lab[v]
        out[v] = cnt
    return out, cnt + 1


@njit(cache=True)
def canonical(labels):
    """Relabel parts in order of their smallest member."""
    n = labels.shape[0]
    mx = 0
    for i in range(n):
        if labels[i] + 1 > mx:
            mx = labels[i] + 1
    remap = np.full(mx, -1, IT)
    out = np.empty(n, IT)
    k = 0
    for v in range(n):
        lv = labels[v]
        if remap[lv] == -1:
            remap[lv] = k
            k += 1
        out[v] = remap[lv]
    return out, k


@njit(cache=True)
def bfs_tree(n, heads, off, eid, roots, alive):
    """Parent edge of every vertex in a BFS forest from ``roots`` (-1 at roots)."""
    pedge = np.full(n, -1, IT)
    seen = np.zeros(n, np.bool_)
    q = np.empty(n, IT)
    qt = 0
    for r in roots:
        if not seen[r]:
            seen[r] = True
            q[qt] = r
            qt += 1
    qh = 0
    while qh < qt:
        u = q[qh]
        qh += 1
        for j in range(off[u], off[u + 1]):
            e = eid[j]
            if not alive[e]:
                continue
            w = heads[e]
            if not seen[w]:
                seen[w] = True
                pedge[w] = e
                q[qt] = w
                qt += 1
    return pedge, seen


@njit(cache=True)
def build_aux(n, tails, heads, off, eid, adj, ioff, ieid, idom, pre, size, order,
              bridge, is_root, real, min_real):
    """Auxiliary graphs of every subtree of a dominator forest, in one batch.

    Subtree T(r) hangs from a root of the batch or from a marked vertex
    (``bridge[v] >= 0``).  Only subtrees holding at least ``min_real``
    vertices with ``real`` set are materialised.  Output vertices of one
    graph are contiguous: ordinary (ascending id), child copies (ascending
    copied id), then the parent copy.  Output edges are grouped by graph.
    """
    m = tails.shape[0]
    marked = bridge >= 0
    root_of = np.empty(n, IT)
    for k in range(order.shape[0]):
        v = order[k]
        if is_root[v] or marked[v]:
            root_of[v] = v
        else:
            root_of[v] = root_of[idom[v]]
    nord = np.zeros(n, IT)
    nreal = np.zeros(n, IT)
    ncopy = np.zeros(n, IT)
    for v in range(n):
        r = root_of[v]
        nord[r] += 1
        if real[v]:
            nreal[r] += 1
        if marked[v]:
            ncopy[root_of[idom[v]]] += 1
    gid = np.full(n, -1, IT)
    G = 0
    for v in range(n):
        if (is_root[v] or marked[v]) and nreal[v] >= min_real and nreal[v] > 0:
            gid[v] = G
            G += 1
    groot = np.empty(G, IT)
    voff = np.zeros(G + 1, IT)
    for v in range(n):
        g = gid[v]
        if g >= 0:
            groot[g] = v
            voff[g + 1] = nord[v] + ncopy[v] + (1 if marked[v] else 0)
    for g in range(G):
        voff[g + 1] += voff[g]
    NV = voff[G]
    vsrc = np.empty(NV, IT)
    vkind = np.empty(NV, IT)
    vgid = np.empty(NV, IT)
    fill = voff[:-1].copy()
    loc_ord = np.full(n, -1, IT)
    loc_copy = np.full(n, -1, IT)
    loc_pc = np.full(n, -1, IT)
    for v in range(n):
        g = gid[root_of[v]]
        if g >= 0:
            x = fill[g]
            loc_ord[v] = x
            vsrc[x] = v
            vkind[x] = ORDINARY
            vgid[x] = g
            fill[g] += 1
    for z in range(n):
        if marked[z]:
            g = gid[root_of[idom[z]]]
            if g >= 0:
                x = fill[g]
                loc_copy[z] = x
                vsrc[x] = z
                vkind[x] = CHILD_COPY
                vgid[x] = g
                fill[g] += 1
    for g in range(G):
        r = groot[g]
        if marked[r]:
            x = fill[g]
            loc_pc[r] = x
            vsrc[x] = idom[r]
            vkind[x] = PARENT_COPY
            vgid[x] = g
            fill[g] += 1

    cap = 2 * m + 3 * n + 1
    et = np.empty(cap, IT)
    eh = np.empty(cap, IT)
    ep = np.empty(cap, IT)
    ek = np.empty(cap, IT)
    eg = np.empty(cap, IT)
    ne = 0
    err = OK
    err_edge = -1

    low_val = pre.copy()
    low_arg = np.full(n, -1, IT)
    seen_a = np.zeros(n, np.bool_)
    for e in range(m):
        u = tails[e]
        v = heads[e]
        if u == v:
            continue
        ru = root_of[u]
        rv = root_of[v]
        if ru == rv:
            g = gid[ru]
            if g >= 0:
                et[ne] = loc_ord[u]
                eh[ne] = loc_ord[v]
                ep[ne] = e
                ek[ne] = INTERNAL
                eg[ne] = g
                ne += 1
            continue
        if bridge[v] == e:
            continue
        # a cross edge that is not a bridge starts strictly below r_v
        if not (pre[rv] < pre[u] < pre[rv] + size[rv]):
            err = ERR_CROSS_EDGE
            err_edge = e
            break
        g = gid[ru]
        if g >= 0 and not seen_a[u]:
            seen_a[u] = True
            et[ne] = loc_ord[u]
            eh[ne] = loc_pc[ru]
            ep[ne] = e
            ek[ne] = SHORT_A
            eg[ne] = g
            ne += 1
        if pre[rv] < low_val[ru]:
            low_val[ru] = pre[rv]
            low_arg[ru] = e
    if err != OK:
        return (err, err_edge, G, groot, root_of, voff, vsrc, vkind, vgid,
                np.zeros(1, IT), et[:0], eh[:0], ep[:0], ek[:0])

    # type (b): merge the preorder sweep with the last marked child seen per subtree
    zb = np.full(m, -1, IT)
    last_z = np.full(n, -1, IT)
    for k in range(order.shape[0]):
        x = order[k]
        if marked[x]:
            last_z[root_of[idom[x]]] = x
        for j in range(off[x], off[x + 1]):
            e = eid[j]
            v = adj[j]
            if x == v:
                continue
            rv = root_of[v]
            if root_of[x] == rv or bridge[v] == e:
                continue
            z = last_z[rv]
            if z < 0 or not (pre[z] <= pre[x] < pre[z] + size[z]):
                err = ERR_NO_Z
                err_edge = e
                break
            zb[e] = z
        if err != OK:
            break
    if err != OK:
        return (err, err_edge, G, groot, root_of, voff, vsrc, vkind, vgid,
                np.zeros(1, IT), et[:0], eh[:0], ep[:0], ek[:0])

    stamp = np.full(n, -1, IT)
    for v in range(n):
        g = gid[root_of[v]]
        if g < 0:
            continue
        for j in range(ioff[v], ioff[v + 1]):
            e = ieid[j]
            z = zb[e]
            if z < 0 or stamp[z] == v:
                continue
            stamp[z] = v
            et[ne] = loc_copy[z]
            eh[ne] = loc_ord[v]
            ep[ne] = e
            ek[ne] = SHORT_B
            eg[ne] = g
            ne += 1

    for w in range(n):
        if not marked[w]:
            continue
        e = bridge[w]
        p = idom[w]
        g = gid[root_of[p]]
        if g >= 0:
            et[ne] = loc_ord[p]
            eh[ne] = loc_copy[w]
            ep[ne] = e
            ek[ne] = CHILD_BRIDGE
            eg[ne] = g
            ne += 1
        g = gid[w]
        if g >= 0:
            et[ne] = loc_pc[w]
            eh[ne] = loc_ord[w]
            ep[ne] = e
            ek[ne] = PARENT_BRIDGE
            eg[ne] = g
            ne += 1

    # type (c): low labels bottom-up over the compressed tree of marked vertices
    for k in range(order.shape[0] - 1, -1, -1):
        y = order[k]
        if marked[y]:
            p = root_of[idom[y]]
            if marked[p] and low_val[y] < low_val[p]:
                low_val[p] = low_val[y]
                low_arg[p] = low_arg[y]
    for z in range(n):
        if not marked[z]:
            continue
        r = root_of[idom[z]]
        g = gid[r]
        if g >= 0 and marked[r] and low_val[z] < pre[r]:
            et[ne] = loc_copy[z]
            eh[ne] = loc_pc[r]
            ep[ne] = low_arg[z]
            ek[ne] = SHORT_C
            eg[ne] = g
            ne += 1

    eoff, perm = csr(G, eg[:ne])
    return (OK, -1, G, groot, root_of, voff, vsrc, vkind, vgid,
            eoff, et[perm], eh[perm], ep[perm], ek[perm])


@njit(cache=True)
def _heap_push(hk, hv, hn, key, val):
    if hn == hk.shape[0]:
        nk = np.empty(2 * hn + 4, IT)
        nv = np.empty(2 * hn + 4, IT)
        nk[:hn] = hk[:hn]
        nv[:hn] = hv[:hn]
        hk = nk
        hv = nv
    i = hn
    hn += 1
    while i > 0:
        p = (i - 1) >> 1
        if hk[p] >= key:
            break
        hk[i] = hk[p]
        hv[i] = hv[p]
        i = p
    hk[i] = key
    hv[i] = val
    return hk, hv, hn


@njit(cache=True)
def _heap_pop(hk, hv, hn):
    key = hk[0]
    val = hv[0]
    hn -= 1
    lk = hk[hn]
    lv = hv[hn]
    i = 0
    while True:
        c = 2 * i + 1
        if c >= hn:
            break
        if c + 1 < hn and hk[c + 1] > hk[c]:
            c += 1
        if hk[c] <= lk:
            break
        hk[i] = hk[c]
        hv[i] = hv[c]
        i = c
    if hn > 0:
        hk[i] = lk
        hv[i] = lv
    return key, val, hn


@njit(cache=True)
def _link(v, p, first, nxt, prv, apar):
    apar[v] = p
    prv[v] = -1
    nxt[v] = first[p]
    if first[p] != -1:
        prv[first[p]] = v
    first[p] = v


@njit(cache=True)
def _unlink(v, first, nxt, prv, apar):
    p = apar[v]
    if prv[v] != -1:
        nxt[prv[v]] = nxt[v]
    else:
        first[p] = nxt[v]
    if nxt[v] != -1:
        prv[nxt[v]] = prv[v]
    nxt[v] = -1
    prv[v] = -1
    apar[v] = -1


@njit(cache=True)
def _peel(rt, k, dt, dh, off, eid, ioff, ieid, lo_out, hi_out,
          alive, placed, act, apar, aped, adep, first, nxt, prv, det, att,
          buf, hk, hv):
    """Order the children of one flat graph so that each gets a low and a high edge.

    The flat graph has vertices rt..rt+k-1 with root rt.  A spanning
    arborescence A of the root plus the unplaced vertices is maintained;
    the deepest activated vertex (one with an edge from the root or from a
    placed vertex) is placed next.
    """
    hn = 0
    for v in range(rt, rt + k):
        alive[v] = v != rt
        placed[v] = False
        act[v] = False
        apar[v] = -1
        aped[v] = -1
        first[v] = -1
        nxt[v] = -1
        prv[v] = -1
        det[v] = False
        att[v] = False
    # initial arborescence by graph search from the root
    att[rt] = True
    adep[rt] = 0
    buf[0] = rt
    sp = 1
    reached = 1
    while sp > 0:
        sp -= 1
        u = buf[sp]
        for j in range(off[u], off[u + 1]):
            de = eid[j]
            w = dh[de]
            if not att[w]:
                att[w] = True
                _link(w, u, first, nxt, prv, apar)
                aped[w] = de
                adep[w] = adep[u] + 1
                buf[sp] = w
                sp += 1
                reached += 1
    if reached != k:
        return ERR_UNREACHED, hk, hv
    for v in range(rt, rt + k):
        att[v] = False
    for j in range(off[rt], off[rt + 1]):
        w = dh[eid[j]]
        if not act[w]:
            act[w] = True
            hk, hv, hn = _heap_push(hk, hv, hn, adep[w], w)
    remaining = k - 1
    while remaining > 0:
        c = -1
        while hn > 0:
            d, v, hn = _heap_pop(hk, hv, hn)
            if alive[v] and act[v] and adep[v] == d:
                c = v
                break
        if c == -1:
            return ERR_STUCK, hk, hv
        hi = aped[c]
        lo = -1
        for j in range(ioff[c], ioff[c + 1]):
            de = ieid[j]
            if placed[dt[de]]:
                lo = de
                break
        if lo == -1:
            for j in range(ioff[c], ioff[c + 1]):
                de = ieid[j]
                if dt[de] == rt and de != hi:
                    lo = de
                    break
        if lo == -1:
            if dt[hi] != rt:
                return ERR_STUCK, hk, hv
            alt = -1
            for j in range(ioff[c], ioff[c + 1]):
                de = ieid[j]
                t = dt[de]
                if t != rt and t != c and alive[t]:
                    alt = de
                    break
            if alt >= 0:
                lo = hi
                hi = alt
            else:
                lo = hi
        lo_out[c] = lo
        hi_out[c] = hi

        alive[c] = False
        placed[c] = True
        remaining -= 1
        _unlink(c, first, nxt, prv, apar)
        if first[c] != -1:
            # detach the subtree below c
            nd = 0
            buf[0] = c
            sp = 1
            while sp > 0:
                sp -= 1
                u = buf[sp]
                ch = first[u]
                while ch != -1:
                    det[ch] = True
                    buf[sp] = ch
                    sp += 1
                    ch = nxt[ch]
                if u != c:
                    # keep a list of detached vertices at the tail of buf
                    buf[k - 1 - nd] = u
                    nd += 1
            base = k - nd
            for i in range(base, k):
                y = buf[i]
                first[y] = -1
                nxt[y] = -1
                prv[y] = -1
                apar[y] = -1
            first[c] = -1
            # reattach: entry points from the root or from alive vertices outside
            qt = 0
            for i in range(base, k):
                y = buf[i]
                for j in range(ioff[y], ioff[y + 1]):
                    de = ieid[j]
                    t = dt[de]
                    if t == rt or (alive[t] and not det[t]):
                        att[y] = True
                        _link(y, t, first, nxt, prv, apar)
                        aped[y] = de
                        adep[y] = adep[t] + 1
                        buf[qt] = y
                        qt += 1
                        break
            qh = 0
            while qh < qt:
                y = buf[qh]
                qh += 1
                for j in range(off[y], off[y + 1]):
                    de = eid[j]
                    w = dh[de]
                    if det[w] and not att[w]:
                        att[w] = True
                        _link(w, y, first, nxt, prv, apar)
                        aped[w] = de
                        adep[w] = adep[y] + 1
                        buf[qt] = w
                        qt += 1
            if qt != nd:
                return ERR_STUCK, hk, hv
            # every detached vertex was copied into buf[0:qt]
            for i in range(qt):
                y = buf[i]
                det[y] = False
                att[y] = False
                if act[y]:
                    hk, hv, hn = _heap_push(hk, hv, hn, adep[y], y)
        for j in range(off[c], off[c + 1]):
            w = dh[eid[j]]
            if alive[w] and not act[w]:
                act[w] = True
                hk, hv, hn = _heap_push(hk, hv, hn, adep[w], w)
    return OK, hk, hv


@njit(cache=True)
def ist_batch(n, tails, heads, off, eid, idom, pre, size, depth, order,
              child_off, children):
    """Two independent spanning trees of every flow graph in a batch.

    Returns (err, lo_edge, hi_edge): for each non-root vertex the original
    edge entering it in the first and in the second tree.
    """
    # flat graph of x: its root copy plus the dominator children of x
    base = np.full(n, -1, IT)
    fid = np.full(n, -1, IT)
    FN = 0
    for x in range(n):
        nc = child_off[x + 1] - child_off[x]
        if nc > 0:
            base[x] = FN
            for j in range(child_off[x], child_off[x + 1]):
                fid[children[j]] = FN + 1 + (j - child_off[x])
            FN += 1 + nc
    fvert = np.full(FN, -1, IT)
    for v in range(n):
        if fid[v] >= 0:
            fvert[fid[v]] = v
    m = tails.shape[0]
    dt = np.empty(m, IT)
    dh = np.empty(m, IT)
    dorig = np.empty(m, IT)
    nd = 0
    path = np.empty(n + 1, IT)
    for k in range(order.shape[0]):
        u = order[k]
        path[depth[u]] = u
        for j in range(off[u], off[u + 1]):
            e = eid[j]
            v = heads[e]
            if u == v:
                continue
            x = idom[v]
            if x < 0:
                continue
            if pre[v] <= pre[u] < pre[v] + size[v]:
                continue
            if not (pre[x] <= pre[u] < pre[x] + size[x]):
                return ERR_CROSS_EDGE, dt[:0], dt[:0]
            if u == x:
                dt[nd] = base[x]
            else:
                dt[nd] = fid[path[depth[x] + 1]]
            dh[nd] = fid[v]
            dorig[nd] = e
            nd += 1
    dt = dt[:nd]
    dh = dh[:nd]
    foff, feid = csr(FN, dt)
    fioff, fieid = csr(FN, dh)
    lo_f = np.full(FN, -1, IT)
    hi_f = np.full(FN, -1, IT)
    alive = np.zeros(FN, np.bool_)
    placed = np.zeros(FN, np.bool_)
    act = np.zeros(FN, np.bool_)
    apar = np.full(FN, -1, IT)
    aped = np.full(FN, -1, IT)
    adep = np.zeros(FN, IT)
    first = np.full(FN, -1, IT)
    nxt = np.full(FN, -1, IT)
    prv = np.full(FN, -1, IT)
    det = np.zeros(FN, np.bool_)
    att = np.zeros(FN, np.bool_)
    hk = np.empty(16, IT)
    hv = np.empty(16, IT)
    maxk = 1
    for x in range(n):
        nc = child_off[x + 1] - child_off[x]
        if nc + 1 > maxk:
            maxk = nc + 1
    buf = np.empty(maxk, IT)
    for x in range(n):
        if base[x] < 0:
            continue
        k = child_off[x + 1] - child_off[x] + 1
        # buf is indexed relative to the flat graph in _peel
        st, hk, hv = _peel(base[x], k, dt, dh, foff, feid, fioff, fieid, lo_f, hi_f,
                           alive, placed, act, apar, aped, adep, first, nxt, prv,
                           det, att, buf, hk, hv)
        if st != OK:
            return st, dt[:0], dt[:0]
    lo_edge = np.full(n, -1, IT)
    hi_edge = np.full(n, -1, IT)
    for f in range(FN):
        v = fvert[f]
        if v >= 0:
            lo_edge[v] = dorig[lo_f[f]]
            hi_edge[v] = dorig[hi_f[f]]
    return OK, lo_edge, hi_edge
