"""Shrinking one side of a separator while keeping its marked distances.

For the near side (interior for ``IN``, exterior for ``OUT``) the far side
is replaced by the union of its shortest paths between dense portals, and
every separator vertex that is not a dense portal is merged into the dense
portal that precedes it on its path from the root.

The construction works on the triangulated graph cut open along the
separator cycle: each cycle vertex that is not a dense portal gets one copy
per side, each cycle edge gets one copy per side, and the two copies meet
only at dense portals. Keeping the near darts plus the far skeleton is
then a subgraph of a planar graph, and the merge step is a sequence of
edge contractions, so the result is planar without any face bookkeeping.

Merging ``c`` into its parent adds the parent edge's length to every other
edge at ``c``. Repeated along the path, an edge ``(u, c)`` becomes
``(u, lambda(c))`` with length ``l(u, c) + dist(c, lambda(c))``, the path
between consecutive dense portals collapses to one edge of the subpath
length, and parallel edges keep the minimum. Every edge of the result is
the length of a real path in the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass
import enum

import numpy as np

from . import _kernels
from .graph import (
    EmbeddedGraph,
    MutableGraph,
    _csr,
    check,
    contract_degree2_map,
    restrict,
    simplify,
)
from .portals import Epsilon, PortalSet, dense_spacing, select_on_separator
from .separator import SeparatorDecomposition


class Side(enum.IntEnum):
    IN = 0
    OUT = 1


@dataclass(frozen=True)
class CutGraph:
    """Graph cut open along the separator cycle.

    ``region[d]`` is 0 for darts inside the cycle and 1 outside. ``copy_of``
    maps every vertex to the input vertex it copies. ``out_vertex[g]`` is
    the outer copy of a split cycle vertex (or ``g`` itself), and
    ``out_dart[d]`` the outer copy of a cycle dart (or -1).
    """

    graph: EmbeddedGraph
    region: np.ndarray
    copy_of: np.ndarray
    out_vertex: np.ndarray
    out_dart: np.ndarray


@dataclass(frozen=True)
class SideReduction:
    result: EmbeddedGraph
    dense_portals: PortalSet
    skeleton_size: int
    source: np.ndarray  # result vertex -> vertex of the input graph


def dense_portals(t: EmbeddedGraph, dec: SeparatorDecomposition, eps: Epsilon, x: float,
                  n_orig: int) -> PortalSet:
    """Dense portals on both paths within the ``8x`` prefix; the fork is forced."""
    return select_on_separator(dec.tree.dist, dec.P, dec.Q, dense_spacing(eps, x, n_orig),
                               8.0 * x, fork=dec.fork)


def cycle_edges(dec: SeparatorDecomposition) -> list[int]:
    par = dec.tree.parent_dart
    cyc = dec.cycle_vertices
    return [int(par[v]) // 2 for v in cyc if v != dec.fork] + [dec.cycle_edge // 2]


def cut_open(t: EmbeddedGraph, dec: SeparatorDecomposition, portal_mask: np.ndarray) -> CutGraph:
    fid, _ = t.face_index
    inner = dec.interior_face
    n, m = t.n, t.num_darts
    gamma_e = cycle_edges(dec)
    on_gamma = np.zeros(t.num_edges, bool)
    on_gamma[gamma_e] = True
    gverts = dec.cycle_vertices
    split = [g for g in gverts if not portal_mask[g]]

    out_vertex = np.arange(n + len(split))
    out_vertex[np.asarray(split, dtype=np.int64)] = n + np.arange(len(split))
    copy_of = np.r_[np.arange(n), np.asarray(split, dtype=np.int64)].astype(np.int64)
    out_dart = np.full(m, -1, np.int64)
    for j, e in enumerate(gamma_e):
        out_dart[2 * e] = m + 2 * j
        out_dart[2 * e + 1] = m + 2 * j + 1

    region = np.r_[np.where(inner[fid], 0, 1), np.ones(2 * len(gamma_e), np.int64)].astype(np.int8)
    gd = np.repeat(on_gamma, 2)
    region[:m][gd] = 0
    extra = m + np.arange(2 * len(gamma_e))
    src = np.empty(2 * len(gamma_e), np.int64)
    for j, e in enumerate(gamma_e):
        src[2 * j], src[2 * j + 1] = 2 * e, 2 * e + 1
    origin = np.r_[t.origin, out_vertex[t.origin[src]]]
    moved = np.zeros(m, bool)
    split_mask = np.zeros(n, bool)
    split_mask[split] = True
    moved = split_mask[t.origin] & ~gd & (region[:m] == 1)
    origin[:m][moved] = out_vertex[t.origin[moved]]
    nxt = np.r_[t.nxt, np.zeros(extra.size, np.int64)]

    def link(lst):
        for a, b in zip(lst, lst[1:] + lst[:1]):
            nxt[a] = b

    for g in gverts:
        rot = t.rotation(g)
        if split_mask[g]:
            link([d for d in rot if gd[d] or region[d] == 0])
            link([int(out_dart[d]) if gd[d] else d for d in rot if gd[d] or region[d] == 1])
        else:
            lst = []
            for d in rot:
                if gd[d]:
                    pair = [int(out_dart[d]), d] if inner[fid[t.nxt[d]]] else [d, int(out_dart[d])]
                    lst += pair
                else:
                    lst.append(d)
            link(lst)

    h = EmbeddedGraph(
        n=n + len(split),
        origin=origin.astype(np.int64),
        twin=np.arange(origin.shape[0], dtype=np.int64) ^ 1,
        nxt=nxt,
        length=np.r_[t.length, t.length[src]],
        artificial=np.r_[t.artificial, t.artificial[src]],
        marked=t.marked[copy_of].copy(),
        label=t.label[copy_of].copy(),
    )
    return CutGraph(h, region, copy_of, out_vertex, out_dart)


def skeleton_darts(g: EmbeddedGraph, usable: np.ndarray, terminals) -> np.ndarray:
    """Darts of ``g`` on shortest paths (over ``usable`` darts) between terminals."""
    indptr, adj, head, length = _csr_of(g, usable)
    term = np.ascontiguousarray(terminals, dtype=np.int64)
    if term.size < 2:
        return np.zeros(g.num_darts, bool)
    return _kernels.path_union(indptr, adj, head, length, np.ascontiguousarray(g.twin),
                               g.n, g.num_darts, term)


def _csr_of(g, usable):
    return _csr(g.n, g.origin, g.head, g.length, usable & ~g.artificial)


def dense_skeleton(g_out: EmbeddedGraph, dense) -> EmbeddedGraph:
    """Union of shortest paths between dense portals, chains contracted, unmarked."""
    dense = np.asarray(list(dense), dtype=np.int64)
    used = skeleton_darts(g_out, np.ones(g_out.num_darts, bool), dense)
    keep_v = np.zeros(g_out.n, bool)
    keep_v[dense] = True
    keep_v[g_out.origin[used]] = True
    sub = restrict(g_out, used, keep_v)
    keep = sub.new_vertex[dense]
    out, _ = contract_degree2_map(sub.graph, keep)
    return out.with_marks(np.zeros(out.n, bool))


def reduce_side(t: EmbeddedGraph, dec: SeparatorDecomposition, which: Side, eps: Epsilon,
                x: float, n_orig: int, debug: bool = False) -> SideReduction:
    """Select dense portals and shrink the ``which`` side of ``t``."""
    return glue_and_shrink(t, dec, which, dense_portals(t, dec, eps, x, n_orig), debug)


def glue_and_shrink(t: EmbeddedGraph, dec: SeparatorDecomposition, which: Side, dense: PortalSet,
                    debug: bool = False) -> SideReduction:
    """Near side of ``t`` with the far side replaced by its dense-portal skeleton.

    ``t`` is the triangulated graph the separator was computed on, with the
    separator vertices already unmarked.
    """
    which = Side(which)
    portal_mask = np.zeros(t.n, bool)
    portal_mask[dense.portals] = True
    cut = cut_open(t, dec, portal_mask)
    h = cut.graph
    if debug:
        check(h, "cut_open")
    real = ~h.artificial
    near = real & (cut.region == which)
    far = real & (cut.region != which)

    far_v = np.zeros(h.n, bool)
    far_v[h.origin[far]] = True
    terminals = np.flatnonzero(far_v & np.r_[portal_mask, np.zeros(h.n - t.n, bool)])
    used = skeleton_darts(h, far, terminals)
    skeleton_size = int(np.count_nonzero(used)) // 2

    keep_v = np.zeros(h.n, bool)
    keep_v[h.origin[near | used]] = True
    keep_v[terminals] = True
    r1 = restrict(h, near | used, keep_v)
    g1 = r1.graph
    if debug:
        check(g1, "glue")

    # separator vertices on the near side that are not dense portals
    side = dec.side
    par = dec.tree.parent_dart
    near_region_of_v = np.zeros(h.n, bool)
    near_region_of_v[h.origin[cut.region == which]] = True
    mg = MutableGraph(g1)
    order = np.argsort(dec.depth, kind="stable")
    new_dart = np.full(h.num_darts, -1, np.int64)
    new_dart[r1.dart_of] = np.arange(r1.dart_of.shape[0])
    gamma_split = cut.out_vertex[: t.n] != np.arange(t.n)
    for c in order.tolist():
        if side[c] != 2 or portal_mask[c]:
            continue
        if gamma_split[c]:
            hv = int(cut.out_vertex[c]) if which == Side.OUT else c
            hd = int(cut.out_dart[par[c]]) if which == Side.OUT else int(par[c])
        else:
            if not near_region_of_v[c]:
                continue
            hv, hd = c, int(par[c])
        d = new_dart[hd]
        if r1.new_vertex[hv] < 0 or d < 0:
            continue
        mg.contract(int(d))
    g2, v2, _ = mg.freeze()
    if debug:
        check(g2, "shrink")
    src2 = r1.vertex_of[v2]

    g3, _ = simplify(g2)
    orig = cut.copy_of[src2]
    g4, v4 = contract_degree2_map(g3, portal_mask[orig] | (side[orig] == which))
    g5, _ = simplify(g4)
    src = orig[v4]
    g5 = g5.with_marks(g5.marked & (side[src] == which))
    if debug:
        check(g5, "reduce")
    return SideReduction(g5, dense, skeleton_size, src)

