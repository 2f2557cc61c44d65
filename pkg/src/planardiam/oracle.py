"""Exact distances for verification.

Deliberately independent of :mod:`planardiam.paths`: the default method
hands an adjacency matrix to scipy's compiled all-pairs routine, and the
``"label-correcting"`` method runs a plain FIFO queue relaxation in pure
Python. Neither uses the tie-broken heap search of the main pipeline.
"""

from __future__ import annotations

from collections import deque

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import EmptySet, NotConnected
from .graph import EmbeddedGraph


def _edge_list(g: EmbeddedGraph):
    keep = ~g.artificial[0::2]
    u = g.origin[0::2][keep]
    v = g.origin[1::2][keep]
    w = g.length[0::2][keep]
    return u, v, w


def _matrix(g: EmbeddedGraph):
    u, v, w = _edge_list(g)
    # minimum over parallel edges; scipy would sum duplicate coordinates
    best = {}
    for a, b, c in zip(u.tolist(), v.tolist(), w.tolist()):
        key = (a, b) if a < b else (b, a)
        if key not in best or c < best[key]:
            best[key] = c
    if best:
        keys = np.array(list(best.keys()), dtype=np.int64)
        vals = np.array(list(best.values()), dtype=np.float64)
    else:
        keys = np.zeros((0, 2), np.int64)
        vals = np.zeros(0)
    return keys, vals


def _scipy_rows(g: EmbeddedGraph, sources) -> np.ndarray:
    keys, vals = _matrix(g)
    # explicit zeros vanish from a sparse matrix, so zero-length edges take the queue route
    if np.any(vals == 0):
        return _queue_rows(g, sources)
    a = csr_matrix((vals, (keys[:, 0], keys[:, 1])), shape=(g.n, g.n))
    return shortest_path(a, method="D", directed=False, indices=np.asarray(sources))


def _queue_rows(g: EmbeddedGraph, sources) -> np.ndarray:
    keys, vals = _matrix(g)
    adj = [[] for _ in range(g.n)]
    for (a, b), c in zip(keys.tolist(), vals.tolist()):
        adj[a].append((b, c))
        adj[b].append((a, c))
    out = np.full((len(sources), g.n), np.inf)
    for i, s in enumerate(sources):
        dist = out[i]
        dist[s] = 0.0
        queue, inq = deque([s]), [False] * g.n
        inq[s] = True
        while queue:
            x = queue.popleft()
            inq[x] = False
            dx = dist[x]
            for y, c in adj[x]:
                if dx + c < dist[y]:
                    dist[y] = dx + c
                    if not inq[y]:
                        inq[y] = True
                        queue.append(y)
    return out


def distance_matrix(g: EmbeddedGraph, method: str = "scipy") -> np.ndarray:
    """Full symmetric distance matrix over real edges."""
    rows = _queue_rows if method == "label-correcting" else _scipy_rows
    return rows(g, list(range(g.n)))


def exact_set_diameter(g: EmbeddedGraph, S, T, method: str = "scipy") -> float:
    """Largest exact distance between a vertex of ``S`` and one of ``T``."""
    S = sorted({int(s) for s in S})
    T = np.asarray(sorted({int(t) for t in T}), dtype=np.int64)
    if not S or T.size == 0:
        raise EmptySet("both vertex sets must be nonempty")
    rows = _queue_rows if method == "label-correcting" else _scipy_rows
    d = rows(g, S)[:, T]
    if not np.all(np.isfinite(d)):
        raise NotConnected("some pair of vertices is disconnected")
    return float(d.max())


def exact_diameter(g: EmbeddedGraph, method: str = "scipy") -> float:
    """Largest exact distance between two marked vertices."""
    marked = np.flatnonzero(g.marked)
    if marked.size == 0:
        return 0.0
    return exact_set_diameter(g, marked, marked, method)
