"""Compiled inner loops (numba) over CSR dart arrays.

Every kernel takes the same CSR layout: ``indptr[v]:indptr[v+1]`` indexes
``adj`` (dart ids leaving ``v``), ``head[d]`` is the endpoint of dart ``d``
and ``length[d]`` its length. Darts that must not be traversed are simply
absent from ``adj``.
"""

import heapq

import numpy as np
from numba import njit

INF = np.inf


@njit(cache=True)
def dijkstra_tree(indptr, adj, head, length, n, source):
    """Deterministic SSSP; ties broken by (distance, predecessor id, dart id)."""
    dist = np.full(n, INF)
    par = np.full(n, -1, np.int64)
    pred = np.full(n, -1, np.int64)
    done = np.zeros(n, np.bool_)
    order = np.empty(n, np.int64)
    cnt = 0
    dist[source] = 0.0
    heap = [(0.0, np.int64(-1), np.int64(-1), np.int64(source))]
    while len(heap) > 0:
        d, u, e0, v = heapq.heappop(heap)
        if done[v] or d != dist[v] or u != pred[v] or e0 != par[v]:
            continue
        done[v] = True
        order[cnt] = v
        cnt += 1
        for i in range(indptr[v], indptr[v + 1]):
            e = adj[i]
            w = head[e]
            if done[w]:
                continue
            nd = d + length[e]
            dw = dist[w]
            if nd < dw or (nd == dw and (v < pred[w] or (v == pred[w] and e < par[w]))):
                dist[w] = nd
                pred[w] = v
                par[w] = e
                heapq.heappush(heap, (nd, v, e, w))
    return dist, par, order[:cnt]


@njit(cache=True)
def _dist_only(indptr, adj, head, length, n, source, dist, done):
    for i in range(n):
        dist[i] = INF
        done[i] = False
    dist[source] = 0.0
    heap = [(0.0, np.int64(source))]
    while len(heap) > 0:
        d, v = heapq.heappop(heap)
        if done[v]:
            continue
        done[v] = True
        for i in range(indptr[v], indptr[v + 1]):
            e = adj[i]
            w = head[e]
            nd = d + length[e]
            if nd < dist[w]:
                dist[w] = nd
                heapq.heappush(heap, (nd, w))


@njit(cache=True)
def distance_rows(indptr, adj, head, length, n, sources):
    out = np.empty((sources.shape[0], n))
    done = np.empty(n, np.bool_)
    for k in range(sources.shape[0]):
        _dist_only(indptr, adj, head, length, n, sources[k], out[k], done)
    return out


@njit(cache=True)
def max_over_targets(indptr, adj, head, length, n, sources, target_mask):
    """Largest finite distance from any source to any masked target."""
    dist = np.empty(n)
    done = np.empty(n, np.bool_)
    best = 0.0
    for k in range(sources.shape[0]):
        _dist_only(indptr, adj, head, length, n, sources[k], dist, done)
        for v in range(n):
            if target_mask[v] and dist[v] > best and dist[v] < INF:
                best = dist[v]
    return best


@njit(cache=True)
def _sift_up(heap, pos, key, i):
    x = heap[i]
    while i > 0:
        p = (i - 1) >> 1
        y = heap[p]
        if key[y] < key[x] or (key[y] == key[x] and y < x):
            break
        heap[i] = y
        pos[y] = i
        i = p
    heap[i] = x
    pos[x] = i


@njit(cache=True)
def _sift_down(heap, pos, key, i, size):
    x = heap[i]
    while True:
        c = 2 * i + 1
        if c >= size:
            break
        y = heap[c]
        if c + 1 < size:
            z = heap[c + 1]
            if key[z] < key[y] or (key[z] == key[y] and z < y):
                c += 1
                y = z
        if key[x] < key[y] or (key[x] == key[y] and x < y):
            break
        heap[i] = y
        pos[y] = i
        i = c
    heap[i] = x
    pos[x] = i


@njit(cache=True)
def tree_until(indptr, adj, head, length, n, source, want, dist, par, pred, pos, heap, stamp, tag):
    """Tie-broken shortest-path tree from ``source`` stopping once every
    vertex with ``want[v] == tag`` is settled. Buffers are reused across
    calls; ``stamp[v] == tag`` marks vertices touched by this call.
    Returns the number of wanted vertices still unsettled."""
    remaining = 0
    for v in range(n):
        if want[v] == tag:
            remaining += 1
    size = 0
    stamp[source] = tag
    dist[source] = 0.0
    par[source] = -1
    pred[source] = -1
    heap[0] = source
    pos[source] = 0
    size = 1
    while size > 0:
        v = heap[0]
        size -= 1
        pos[v] = -2
        if size > 0:
            heap[0] = heap[size]
            pos[heap[0]] = 0
            _sift_down(heap, pos, dist, 0, size)
        if want[v] == tag:
            remaining -= 1
            if remaining == 0:
                break
        d = dist[v]
        for i in range(indptr[v], indptr[v + 1]):
            e = adj[i]
            w = head[e]
            nd = d + length[e]
            if stamp[w] != tag:
                stamp[w] = tag
                dist[w] = nd
                pred[w] = v
                par[w] = e
                heap[size] = w
                pos[w] = size
                size += 1
                _sift_up(heap, pos, dist, size - 1)
            elif pos[w] == -2:
                continue
            elif nd < dist[w]:
                dist[w] = nd
                pred[w] = v
                par[w] = e
                _sift_up(heap, pos, dist, pos[w])
            elif nd == dist[w] and (v < pred[w] or (v == pred[w] and e < par[w])):
                pred[w] = v
                par[w] = e
    return remaining


@njit(cache=True)
def path_union(indptr, adj, head, length, twin, n, num_darts, terminals):
    """Edges on the tie-broken shortest paths between every terminal pair.

    One tree per terminal; pair (i, j) with j > i is traced in the tree of
    terminal i, which stops growing once terminals i+1.. are settled.
    Returns a per-dart mask (both darts of each used edge).
    """
    used = np.zeros(num_darts, np.bool_)
    on_path = np.full(n, -1, np.int64)
    want = np.full(n, -1, np.int64)
    stamp = np.full(n, -1, np.int64)
    dist = np.empty(n)
    par = np.empty(n, np.int64)
    pred = np.empty(n, np.int64)
    pos = np.empty(n, np.int64)
    heap = np.empty(n, np.int64)
    k = terminals.shape[0]
    for i in range(k - 1):
        s = terminals[i]
        for j in range(i + 1, k):
            if terminals[j] != s:
                want[terminals[j]] = i
        tree_until(indptr, adj, head, length, n, s, want, dist, par, pred, pos, heap, stamp, i)
        on_path[s] = i
        for j in range(i + 1, k):
            v = terminals[j]
            if stamp[v] != i or pos[v] != -2:
                continue
            while on_path[v] != i:
                on_path[v] = i
                e = par[v]
                used[e] = True
                used[twin[e]] = True
                v = pred[v]
    return used


@njit(cache=True)
def perm_cycles(perm):
    """Label the cycles of a permutation; returns (labels, count)."""
    m = perm.shape[0]
    lab = np.full(m, -1, np.int64)
    k = 0
    for d in range(m):
        if lab[d] >= 0:
            continue
        e = d
        while lab[e] < 0:
            lab[e] = k
            e = perm[e]
        k += 1
    return lab, k


@njit(cache=True)
def rotation_rank(nxt):
    """Position of each dart in its vertex rotation, counted from the smallest dart id."""
    m = nxt.shape[0]
    rank = np.full(m, -1, np.int64)
    for d in range(m):
        if rank[d] >= 0:
            continue
        e = d
        r = 0
        while rank[e] < 0:
            rank[e] = r
            r += 1
            e = nxt[e]
    return rank


@njit(cache=True)
def fan_triangulate(origin, nxt, prv, m, starts, sizes):
    """Cut ears off each listed face until it has three darts.

    ``origin``/``nxt``/``prv`` have spare capacity beyond ``m`` for the new
    chord darts. Each face is fanned from its smallest vertex. Returns the
    new dart count.
    """
    for f in range(starts.shape[0]):
        d0 = starts[f]
        best = d0
        d = nxt[d0 ^ 1]
        while d != d0:
            if origin[d] < origin[best]:
                best = d
            d = nxt[d ^ 1]
        a = best
        size = sizes[f]
        misses = 0
        while size > 3:
            b = nxt[a ^ 1]
            c = nxt[b ^ 1]
            if origin[c] != origin[a]:
                x = m
                m += 2
                origin[x] = origin[a]
                origin[x + 1] = origin[c]
                # chord x sits just before a at origin(a), x+1 just before c
                p = prv[a]
                nxt[p] = x
                prv[x] = p
                nxt[x] = a
                prv[a] = x
                p = prv[c]
                nxt[p] = x + 1
                prv[x + 1] = p
                nxt[x + 1] = c
                prv[c] = x + 1
                a = x
                size -= 1
                misses = 0
            else:
                a = b
                misses += 1
                if misses > size:
                    break
    return m
