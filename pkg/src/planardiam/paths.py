"""Deterministic single-source shortest paths over real (non-artificial) darts."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import NoMarkedVertices, NotConnected, Unreached
from .graph import EmbeddedGraph, is_connected

UNREACHED = np.inf


@dataclass(frozen=True)
class ShortestPathTree:
    """Distances and parent darts from one source.

    ``parent_dart[v]`` is the dart entering ``v`` on its tree path, or -1 for
    the source and unreached vertices. ``order`` lists reached vertices in
    settling order (non-decreasing distance).
    """

    source: int
    dist: np.ndarray
    parent_dart: np.ndarray
    order: np.ndarray
    origin: np.ndarray

    def parent(self, v: int) -> int:
        d = int(self.parent_dart[v])
        return -1 if d < 0 else int(self.origin[d])

    def reached(self, v: int) -> bool:
        return bool(np.isfinite(self.dist[v]))


def sssp(g: EmbeddedGraph, source: int) -> ShortestPathTree:
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range")
    indptr, adj, head, length = g.csr
    dist, par, order = _kernels.dijkstra_tree(indptr, adj, head, length, g.n, int(source))
    return ShortestPathTree(int(source), dist, par, order, g.origin)


def tree_path(t: ShortestPathTree, v: int) -> list[int]:
    """Vertices from the source to ``v`` along parent darts."""
    if not np.isfinite(t.dist[v]):
        raise Unreached(f"vertex {v} is not reachable from {t.source}")
    out = [int(v)]
    while out[-1] != t.source:
        out.append(int(t.origin[t.parent_dart[out[-1]]]))
    out.reverse()
    return out


def bootstrap_x(g: EmbeddedGraph) -> float:
    """Eccentricity of the lowest marked vertex among marked vertices.

    By the triangle inequality the marked-set diameter lies in ``[x, 2x]``.
    """
    marked = g.marked_vertices()
    if marked.size == 0:
        raise NoMarkedVertices("bootstrap needs at least one marked vertex")
    if not is_connected(g, real_only=True):
        raise NotConnected("bootstrap needs a connected graph")
    indptr, adj, head, length = g.csr
    return float(_kernels.max_over_targets(indptr, adj, head, length, g.n,
                                           marked[:1].astype(np.int64), g.marked))


def apsp_marked(g: EmbeddedGraph) -> float:
    """Largest distance between two marked vertices (0 if fewer than two)."""
    marked = g.marked_vertices()
    if marked.size < 2:
        return 0.0
    indptr, adj, head, length = g.csr
    return float(_kernels.max_over_targets(indptr, adj, head, length, g.n,
                                           marked.astype(np.int64), g.marked))


def distance_rows(g: EmbeddedGraph, sources) -> np.ndarray:
    """Matrix of distances, one row per source."""
    indptr, adj, head, length = g.csr
    src = np.ascontiguousarray(sources, dtype=np.int64)
    return _kernels.distance_rows(indptr, adj, head, length, g.n, src)


def perturb(g: EmbeddedGraph, seed: int) -> EmbeddedGraph:
    """Scale each edge by ``1 + u * 1e-12`` with ``u`` uniform, making ties unlikely."""
    rng = np.random.default_rng(seed)
    u = rng.random(g.num_edges)
    factor = np.repeat(1.0 + u * 1e-12, 2)
    return g.with_lengths(g.length * factor)
