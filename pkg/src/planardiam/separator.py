"""Fundamental-cycle separators built from two shortest paths.

The shortest-path tree ``T`` from the root spans the graph, so the
non-tree edges span the dual (the cotree). Removing a non-tree edge ``e``
from the cotree splits the faces into the subtree below ``e`` and the
rest; the subtree is the inside of the cycle ``T + e`` because the cotree
is rooted at the outer face. Face counts and face-degree sums accumulated
over cotree subtrees give every candidate's interior vertex count in O(1)
through Euler's formula.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import depth_first_order

from .errors import NoBalancedEdge, NotConnected, RootUnmarked
from .graph import EmbeddedGraph
from .paths import ShortestPathTree, sssp, tree_path


@dataclass(frozen=True)
class SeparatorDecomposition:
    """Root, cycle edge, the two paths and the vertex classes.

    ``side`` holds 0 for interior (A), 1 for exterior (B) and 2 for the
    separator (C). ``fork`` is the last vertex shared by P and Q.
    ``interior_face`` marks the faces enclosed by the cycle.
    """

    root: int
    cycle_edge: int
    P: list
    Q: list
    side: np.ndarray
    fork: int
    tree: ShortestPathTree
    depth: np.ndarray
    interior_face: np.ndarray

    @property
    def A(self) -> set:
        return set(np.flatnonzero(self.side == 0).tolist())

    @property
    def B(self) -> set:
        return set(np.flatnonzero(self.side == 1).tolist())

    @property
    def C(self) -> set:
        return set(np.flatnonzero(self.side == 2).tolist())

    @property
    def cycle_vertices(self) -> list:
        """Vertices of the cycle ``T + e``, from the fork down P and back up Q."""
        i = self.P.index(self.fork)
        return self.P[i:] + self.Q[i + 1:][::-1]


def balance_limit(n: int) -> int:
    return math.ceil(2 * n / 3)


def _lca(par_vertex: np.ndarray, depth: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    levels = max(1, int(depth.max()).bit_length())
    up = [par_vertex]
    for _ in range(levels - 1):
        up.append(up[-1][up[-1]])
    a, b = a.copy(), b.copy()
    swap = depth[a] < depth[b]
    a[swap], b[swap] = b[swap], a[swap].copy()
    diff = depth[a] - depth[b]
    for k in range(levels):
        bit = (diff >> k) & 1 == 1
        a[bit] = up[k][a[bit]]
    for k in range(levels - 1, -1, -1):
        move = up[k][a] != up[k][b]
        a[move] = up[k][a[move]]
        b[move] = up[k][b[move]]
    return np.where(a == b, a, par_vertex[a])


def _trivial(g: EmbeddedGraph, root: int, tree: ShortestPathTree, depth) -> SeparatorDecomposition:
    side = np.full(g.n, 2, np.int8)
    other = [v for v in range(g.n) if v != root]
    q = tree_path(tree, other[0]) if other else [root]
    return SeparatorDecomposition(root, -1, [root], q, side, root, tree, depth,
                                  np.zeros(g.face_index[1], bool))


def find_separator(g: EmbeddedGraph, root: int, naive: bool = False) -> SeparatorDecomposition:
    """Balanced separator from the shortest-path tree rooted at ``root``.

    Among all non-tree edges the one minimising the larger side wins, with
    ties going to the lower edge id. ``naive`` recounts every candidate by
    flood fill instead of the cotree accumulation (slow, for testing).
    """
    if not g.marked[root]:
        raise RootUnmarked(f"root {root} is not marked")
    tree = sssp(g, root)
    n = g.n
    if tree.order.shape[0] != n:
        raise NotConnected("separator needs a connected graph")
    par = tree.parent_dart
    par_vertex = np.where(par >= 0, g.origin[np.maximum(par, 0)], np.arange(n))
    depth = np.zeros(n, np.int64)
    for v in tree.order[1:]:
        depth[v] = depth[par_vertex[v]] + 1

    in_tree = np.zeros(g.num_edges, bool)
    in_tree[par[par >= 0] // 2] = True
    cand = np.flatnonzero(~in_tree)
    if n <= 2 or cand.size == 0:
        return _trivial(g, root, tree, depth)

    fid, nfaces = g.face_index
    u = g.origin[2 * cand]
    v = g.origin[2 * cand + 1]
    f1, f2 = fid[2 * cand], fid[2 * cand + 1]
    dual = coo_matrix((np.ones(2 * cand.size), (np.r_[f1, f2], np.r_[f2, f1])),
                      shape=(nfaces, nfaces)).tocsr()
    outer = int(fid[0])
    pre, pred = depth_first_order(dual, outer, directed=False, return_predecessors=True)
    if pre.shape[0] != nfaces:
        raise NoBalancedEdge("cotree does not span the faces")
    size = np.bincount(fid, minlength=nfaces).astype(np.int64)
    nf = np.ones(nfaces, np.int64)
    sdeg = size.copy()
    for f in pre[:0:-1]:
        p = pred[f]
        nf[p] += nf[f]
        sdeg[p] += sdeg[f]
    tin = np.empty(nfaces, np.int64)
    tin[pre] = np.arange(nfaces)

    child = np.where(pred[f1] == f2, f1, f2)
    w = _lca(par_vertex, depth, u, v)
    cyc_len = depth[u] + depth[v] - 2 * depth[w] + 1
    interior = (sdeg[child] - cyc_len) // 2 - nf[child] + 1
    has_prefix = w != root
    pre_face = fid[np.where(has_prefix, par[w], 0)]
    prefix_inside = has_prefix & (tin[pre_face] >= tin[child]) & (tin[pre_face] < tin[child] + nf[child])
    size_a = np.where(prefix_inside, interior - depth[w], interior)
    size_b = n - cyc_len - interior - np.where(prefix_inside, 0, depth[w])

    if naive:
        size_a, size_b = _naive_counts(g, tree, par_vertex, depth, cand, w)

    worst = np.maximum(size_a, size_b)
    best = int(np.lexsort((cand, worst))[0])
    if worst[best] > balance_limit(n):
        raise NoBalancedEdge(f"best candidate leaves a side of {int(worst[best])} > {balance_limit(n)}")

    e = int(cand[best])
    c = int(child[best])
    face_in = np.zeros(nfaces, bool)
    face_in[pre[tin[c]:tin[c] + nf[c]]] = True
    P = tree_path(tree, int(u[best]))
    Q = tree_path(tree, int(v[best]))
    side = np.where(face_in[fid[g.first_dart]], 0, 1).astype(np.int8)
    side[P] = 2
    side[Q] = 2
    return SeparatorDecomposition(root, 2 * e, P, Q, side, int(w[best]), tree, depth, face_in)


def _naive_counts(g, tree, par_vertex, depth, cand, fork):
    """Side sizes per candidate by flood filling the dual away from the cycle."""
    fid, nfaces = g.face_index
    outer = int(fid[0])
    tw, nx = g.twin, g.nxt
    sa = np.empty(cand.size, np.int64)
    sb = np.empty(cand.size, np.int64)
    for i, e in enumerate(cand.tolist()):
        a, b = int(g.origin[2 * e]), int(g.origin[2 * e + 1])
        on_cycle = np.zeros(g.num_edges, bool)
        on_cycle[e] = True
        cverts = set()
        for x in (a, b):
            while x != fork[i]:
                cverts.add(x)
                on_cycle[tree.parent_dart[x] // 2] = True
                x = int(par_vertex[x])
        cverts.add(int(fork[i]))
        x = int(fork[i])
        prefix = []
        while x != tree.source:
            x = int(par_vertex[x])
            prefix.append(x)
        outside = np.zeros(nfaces, bool)
        outside[outer] = True
        stack = [outer]
        face_darts = [[] for _ in range(nfaces)]
        for d in range(g.num_darts):
            face_darts[fid[d]].append(d)
        while stack:
            f = stack.pop()
            for d in face_darts[f]:
                if on_cycle[d // 2]:
                    continue
                h = fid[tw[d]]
                if not outside[h]:
                    outside[h] = True
                    stack.append(h)
        inside_v = np.zeros(g.n, bool)
        inside_v[g.origin[~outside[fid]]] = True
        cmask = np.zeros(g.n, bool)
        cmask[list(cverts) + prefix] = True
        sa[i] = np.count_nonzero(inside_v & ~cmask)
        sb[i] = g.n - np.count_nonzero(cmask) - sa[i]
    return sa, sb
