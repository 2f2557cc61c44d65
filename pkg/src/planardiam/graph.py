"""Embedded planar multigraphs stored as darts (half-edges).

Edge ``i`` owns darts ``2i`` and ``2i + 1``; ``twin`` pairs them. Around
each vertex the darts form one cycle of ``nxt`` (the rotation). A face is
an orbit of ``d -> nxt[twin[d]]``. Graphs are immutable: every
transformation returns a new :class:`EmbeddedGraph`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
import math

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels
from .errors import (
    EmbeddingSpliceFailure,
    MalformedRotation,
    NegativeLength,
    NonPlanarEmbedding,
    NotConnected,
)

FaceCycle = tuple  # ordered dart ids of one face boundary


@dataclass(frozen=True, eq=False)
class EmbeddedGraph:
    n: int
    origin: np.ndarray
    twin: np.ndarray
    nxt: np.ndarray
    length: np.ndarray
    artificial: np.ndarray
    marked: np.ndarray
    label: np.ndarray

    def __post_init__(self):
        for name in ("origin", "twin", "nxt", "length", "artificial", "marked", "label"):
            getattr(self, name).setflags(write=False)

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def num_darts(self) -> int:
        return int(self.origin.shape[0])

    @property
    def num_edges(self) -> int:
        return self.num_darts // 2

    @cached_property
    def head(self) -> np.ndarray:
        h = self.origin[self.twin]
        h.setflags(write=False)
        return h

    @cached_property
    def degree(self) -> np.ndarray:
        return np.bincount(self.origin, minlength=self.n)

    @cached_property
    def face_index(self) -> tuple[np.ndarray, int]:
        """Per-dart face id and the number of faces."""
        lab, k = _kernels.perm_cycles(np.ascontiguousarray(self.nxt[self.twin]))
        lab.setflags(write=False)
        return lab, int(k)

    @cached_property
    def csr(self):
        """(indptr, adj, head, length) over non-artificial darts."""
        return _csr(self.n, self.origin, self.head, self.length, ~self.artificial)

    @cached_property
    def first_dart(self) -> np.ndarray:
        """Smallest dart id at each vertex, -1 for isolated vertices."""
        first = np.full(self.n, -1, np.int64)
        first[self.origin[::-1]] = np.arange(self.num_darts - 1, -1, -1)
        return first

    def marked_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.marked)

    def edges(self) -> list[tuple[int, int, float]]:
        o, h, ln = self.origin[0::2], self.origin[1::2], self.length[0::2]
        return [(int(a), int(b), float(c)) for a, b, c in zip(o, h, ln)]

    def with_marks(self, marked) -> EmbeddedGraph:
        """Copy with a new marked set (boolean mask or vertex ids)."""
        marked = np.asarray(marked)
        if marked.dtype == bool:
            m = marked.copy()
        else:
            m = np.zeros(self.n, bool)
            m[marked.astype(np.int64)] = True
        return _replace(self, marked=m)

    def with_lengths(self, length) -> EmbeddedGraph:
        return _replace(self, length=np.asarray(length, dtype=np.float64).copy())

    def rotation(self, v: int) -> list[int]:
        d0 = int(self.first_dart[v])
        if d0 < 0:
            return []
        out, d = [d0], int(self.nxt[d0])
        while d != d0:
            out.append(d)
            d = int(self.nxt[d])
        return out


def _replace(g: EmbeddedGraph, **kw) -> EmbeddedGraph:
    fields = dict(n=g.n, origin=g.origin.copy(), twin=g.twin.copy(), nxt=g.nxt.copy(),
                  length=g.length.copy(), artificial=g.artificial.copy(),
                  marked=g.marked.copy(), label=g.label.copy())
    fields.update(kw)
    return EmbeddedGraph(**fields)


def _csr(n, origin, head, length, usable):
    darts = np.flatnonzero(usable)
    order = darts[np.argsort(origin[darts], kind="stable")]
    counts = np.bincount(origin[order], minlength=n)
    indptr = np.zeros(n + 1, np.int64)
    np.cumsum(counts, out=indptr[1:])
    return (indptr, order.astype(np.int64), np.ascontiguousarray(head, dtype=np.int64),
            np.ascontiguousarray(length, dtype=np.float64))


def _make(n, origin, nxt, length, artificial=None, marked=None, label=None) -> EmbeddedGraph:
    origin = np.asarray(origin, dtype=np.int64)
    m = origin.shape[0]
    return EmbeddedGraph(
        n=int(n),
        origin=origin,
        twin=np.arange(m, dtype=np.int64) ^ 1,
        nxt=np.asarray(nxt, dtype=np.int64),
        length=np.asarray(length, dtype=np.float64),
        artificial=np.zeros(m, bool) if artificial is None else np.asarray(artificial, dtype=bool),
        marked=np.ones(n, bool) if marked is None else np.asarray(marked, dtype=bool),
        label=np.arange(n, dtype=np.int64) if label is None else np.asarray(label, dtype=np.int64),
    )


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------


def _edge_arrays(n, edges):
    arr = np.asarray(edges, dtype=np.float64).reshape(-1, 3)
    u, v, w = arr[:, 0], arr[:, 1], arr[:, 2]
    if np.any(u != np.floor(u)) or np.any(v != np.floor(v)):
        raise MalformedRotation("edge endpoints must be integers")
    u, v = u.astype(np.int64), v.astype(np.int64)
    bad = np.flatnonzero((u < 0) | (u >= n) | (v < 0) | (v >= n))
    if bad.size:
        raise MalformedRotation(f"edge {int(bad[0])} has endpoint outside [0, {n})")
    bad = np.flatnonzero(u == v)
    if bad.size:
        raise MalformedRotation(f"edge {int(bad[0])} is a self-loop")
    bad = np.flatnonzero(~(w >= 0.0) | np.isinf(w))
    if bad.size:
        raise NegativeLength(f"edge {int(bad[0])} has length {float(w[bad[0]])!r}")
    origin = np.empty(2 * u.shape[0], np.int64)
    origin[0::2], origin[1::2] = u, v
    return origin, np.repeat(w, 2)


def from_arrays(n, origin, nxt, length, marked=None) -> EmbeddedGraph:
    """Validated graph from paired dart arrays (twin of ``d`` is ``d ^ 1``)."""
    g = _make(n, origin, nxt, length, marked=marked)
    cert = validate(g)
    if not cert.euler_ok and cert.twin_ok and cert.rotation_ok:
        raise NonPlanarEmbedding("; ".join(cert.violations))
    if not cert.ok:
        raise MalformedRotation("; ".join(cert.violations))
    return g


def build(vertex_count, edges, rotations, marked=None) -> EmbeddedGraph:
    """Build and validate a graph from edges ``(u, v, length)`` and rotations.

    ``rotations[v]`` lists the darts leaving ``v`` in cyclic order, where
    edge ``i`` contributes dart ``2i`` at ``u`` and ``2i + 1`` at ``v``.
    """
    n = int(vertex_count)
    origin, length = _edge_arrays(n, edges)
    m = origin.shape[0]
    if len(rotations) != n:
        raise MalformedRotation(f"expected {n} rotations, got {len(rotations)}")
    nxt = np.full(m, -1, np.int64)
    for v, rot in enumerate(rotations):
        rot = [int(d) for d in rot]
        if len(set(rot)) != len(rot):
            raise MalformedRotation(f"rotation of vertex {v} repeats a dart")
        for d in rot:
            if not 0 <= d < m or origin[d] != v:
                raise MalformedRotation(f"rotation of vertex {v} lists dart {d} not leaving it")
            if nxt[d] != -1:
                raise MalformedRotation(f"dart {d} listed twice")
        for a, b in zip(rot, rot[1:] + rot[:1]):
            nxt[a] = b
    missing = np.flatnonzero(nxt < 0)
    if missing.size:
        raise MalformedRotation(f"dart {int(missing[0])} missing from its vertex rotation")
    return from_arrays(n, origin, nxt, length, marked)


def rotations_from_coordinates(origin, coords) -> np.ndarray:
    """``nxt`` array ordering each vertex's darts counter-clockwise by angle."""
    xy = np.asarray(coords, dtype=np.float64)
    head = origin[np.arange(origin.shape[0]) ^ 1]
    delta = xy[head] - xy[origin]
    ang = np.arctan2(delta[:, 1], delta[:, 0])
    order = np.lexsort((np.arange(origin.shape[0]), ang, origin))
    nxt = np.empty(origin.shape[0], np.int64)
    if order.size:
        o = origin[order]
        succ = np.roll(order, -1)
        starts = np.flatnonzero(np.r_[True, o[1:] != o[:-1]])
        ends = np.r_[starts[1:] - 1, order.size - 1]
        succ[ends] = order[starts]
        nxt[order] = succ
    return nxt


def embed_by_coordinates(vertex_count, edges, coords, marked=None) -> EmbeddedGraph:
    """Derive rotations by sorting each vertex's darts counter-clockwise."""
    n = int(vertex_count)
    xy = np.asarray(coords, dtype=np.float64)
    if xy.shape != (n, 2):
        raise MalformedRotation("coordinates must be an (n, 2) array")
    origin, length = _edge_arrays(n, edges)
    return from_arrays(n, origin, rotations_from_coordinates(origin, xy), length, marked)


@dataclass
class Certificate:
    twin_ok: bool = True
    rotation_ok: bool = True
    euler_ok: bool = True
    lengths_ok: bool = True
    faces: int = 0
    components: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(g: EmbeddedGraph) -> Certificate:
    cert = Certificate()
    m = g.num_darts
    d = np.arange(m)
    tw, nx = g.twin, g.nxt
    if m and (tw.min() < 0 or tw.max() >= m or np.any(tw[tw] != d) or np.any(tw == d)):
        cert.twin_ok = False
        cert.violations.append("twin is not a fixed-point-free involution")
    elif m and np.any(g.length[tw] != g.length):
        cert.twin_ok = False
        cert.violations.append("twin darts carry different lengths")
    if m and (g.origin.min() < 0 or g.origin.max() >= g.n):
        cert.rotation_ok = False
        cert.violations.append("dart origin out of range")
    elif m and (nx.min() < 0 or nx.max() >= m or np.any(np.bincount(nx, minlength=m) != 1)):
        cert.rotation_ok = False
        cert.violations.append("next_around_origin is not a permutation")
    elif m:
        if np.any(g.origin[nx] != g.origin):
            cert.rotation_ok = False
            cert.violations.append("next_around_origin leaves the vertex")
        else:
            _, cycles = _kernels.perm_cycles(np.ascontiguousarray(nx))
            if cycles != np.count_nonzero(g.degree):
                cert.rotation_ok = False
                cert.violations.append("a vertex rotation splits into several cycles")
    if m and (not np.all(np.isfinite(g.length)) or np.any(g.length < 0)):
        cert.lengths_ok = False
        cert.violations.append("negative or non-finite length")
    if not (cert.twin_ok and cert.rotation_ok):
        cert.euler_ok = False
        return cert
    comp = components(g)
    ncomp = int(comp.max()) + 1 if g.n else 0
    cert.components = ncomp
    v_c = np.bincount(comp, minlength=ncomp)
    e_c = np.bincount(comp[g.origin], minlength=ncomp) // 2
    fid, nf = g.face_index
    cert.faces = nf
    f_c = np.zeros(ncomp, np.int64)
    if m:
        face_comp = np.empty(nf, np.int64)
        face_comp[fid] = comp[g.origin]
        f_c = np.bincount(face_comp, minlength=ncomp)
    f_c = f_c + (e_c == 0)
    cert.faces = int(f_c.sum())
    bad = np.flatnonzero(v_c - e_c + f_c != 2)
    if bad.size:
        cert.euler_ok = False
        c = int(bad[0])
        cert.violations.append(
            f"Euler check fails on component {c}: V-E+F = {v_c[c]}-{e_c[c]}+{f_c[c]} != 2")
    return cert


def check(g: EmbeddedGraph, where: str = "") -> EmbeddedGraph:
    """Raise if ``g`` is not a valid embedding (debug-mode guard)."""
    cert = validate(g)
    if not cert.ok:
        raise EmbeddingSpliceFailure(f"{where}: {'; '.join(cert.violations)}")
    return g


def components(g: EmbeddedGraph) -> np.ndarray:
    if g.num_darts == 0:
        return np.arange(g.n)
    a = coo_matrix((np.ones(g.num_edges), (g.origin[0::2], g.origin[1::2])), shape=(g.n, g.n))
    _, lab = connected_components(a, directed=False)
    return lab


def is_connected(g: EmbeddedGraph, real_only: bool = False) -> bool:
    if g.n <= 1:
        return True
    if real_only and g.artificial.any():
        keep = ~g.artificial[0::2]
        o, h = g.origin[0::2][keep], g.origin[1::2][keep]
    else:
        o, h = g.origin[0::2], g.origin[1::2]
    a = coo_matrix((np.ones(o.shape[0]), (o, h)), shape=(g.n, g.n))
    k, _ = connected_components(a, directed=False)
    return k == 1


def faces(g: EmbeddedGraph) -> list[FaceCycle]:
    out, seen = [], np.zeros(g.num_darts, bool)
    nx, tw = g.nxt, g.twin
    for d0 in range(g.num_darts):
        if seen[d0]:
            continue
        cyc, d = [], d0
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = int(nx[tw[d]])
        out.append(tuple(cyc))
    return out


# ---------------------------------------------------------------------------
# restriction (subgraphs inherit the rotation order)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Restriction:
    graph: EmbeddedGraph
    vertex_of: np.ndarray  # new vertex -> old vertex
    dart_of: np.ndarray  # new dart -> old dart
    new_vertex: np.ndarray  # old vertex -> new vertex or -1


def restrict(g: EmbeddedGraph, keep_darts, keep_vertices=None) -> Restriction:
    """Subgraph on the kept darts (pairs must be kept together).

    Vertices kept are ``keep_vertices`` if given, otherwise every endpoint
    of a kept dart.
    """
    keep = np.asarray(keep_darts, dtype=bool)
    if np.any(keep != keep[g.twin]):
        raise ValueError("dart mask must keep twins together")
    kept = np.flatnonzero(keep)
    if keep_vertices is None:
        vmask = np.zeros(g.n, bool)
        vmask[g.origin[kept]] = True
    else:
        vmask = np.asarray(keep_vertices, dtype=bool).copy()
        if np.any(~vmask[g.origin[kept]]):
            raise ValueError("kept dart leaves the kept vertex set")
    vertex_of = np.flatnonzero(vmask)
    new_vertex = np.full(g.n, -1, np.int64)
    new_vertex[vertex_of] = np.arange(vertex_of.shape[0])
    new_dart = np.full(g.num_darts, -1, np.int64)
    new_dart[kept] = np.arange(kept.shape[0])
    rank = _kernels.rotation_rank(np.ascontiguousarray(g.nxt))
    org = g.origin[kept]
    order = np.lexsort((rank[kept], org))
    seq = kept[order]
    nxt = np.empty(kept.shape[0], np.int64)
    if seq.size:
        o = g.origin[seq]
        succ = np.roll(seq, -1)
        starts = np.r_[True, o[1:] != o[:-1]]
        first_of_group = np.maximum.accumulate(np.where(starts, np.arange(seq.size), 0))
        ends = np.r_[o[1:] != o[:-1], True]
        succ[ends] = seq[first_of_group[ends]]
        nxt[new_dart[seq]] = new_dart[succ]
    sub = EmbeddedGraph(
        n=int(vertex_of.shape[0]),
        origin=new_vertex[org],
        twin=new_dart[g.twin[kept]],
        nxt=nxt,
        length=g.length[kept].copy(),
        artificial=g.artificial[kept].copy(),
        marked=g.marked[vertex_of].copy(),
        label=g.label[vertex_of].copy(),
    )
    return Restriction(sub, vertex_of, kept, new_vertex)


def extract_induced(g: EmbeddedGraph, vertices) -> EmbeddedGraph:
    return extract_induced_map(g, vertices).graph


def extract_induced_map(g: EmbeddedGraph, vertices) -> Restriction:
    vmask = np.zeros(g.n, bool)
    vmask[np.asarray(list(vertices) if not isinstance(vertices, np.ndarray) else vertices,
                     dtype=np.int64)] = True
    if not vmask.any():
        raise ValueError("vertex set must be nonempty")
    keep = vmask[g.origin] & vmask[g.head]
    return restrict(g, keep, vmask)


def drop_artificial(g: EmbeddedGraph) -> EmbeddedGraph:
    if not g.artificial.any():
        return g
    return restrict(g, ~g.artificial, np.ones(g.n, bool)).graph


# ---------------------------------------------------------------------------
# mutable working copy for local surgery
# ---------------------------------------------------------------------------


class MutableGraph:
    """Linked-list rotation system supporting insertion and contraction.

    Twins are always ``d ^ 1``. Removed darts stay allocated and are
    dropped by :meth:`freeze`.
    """

    def __init__(self, g: EmbeddedGraph):
        if g.num_darts and np.any(g.twin != (np.arange(g.num_darts) ^ 1)):
            raise ValueError("MutableGraph requires paired dart numbering")
        self.n = g.n
        self.origin = g.origin.tolist()
        self.nxt = g.nxt.tolist()
        prv = np.empty(g.num_darts, np.int64)
        prv[g.nxt] = np.arange(g.num_darts)
        self.prv = prv.tolist()
        self.length = g.length.tolist()
        self.artificial = g.artificial.tolist()
        self.alive = [True] * g.num_darts
        self.vertex_alive = [True] * g.n
        self.marked = g.marked.tolist()
        self.label = g.label.tolist()
        self.first = g.first_dart.tolist()
        self.deg = g.degree.tolist()

    def fs(self, d: int) -> int:
        """Successor of ``d`` on its face."""
        return self.nxt[d ^ 1]

    def head(self, d: int) -> int:
        return self.origin[d ^ 1]

    def darts_at(self, v: int) -> list[int]:
        d0 = self.first[v]
        if d0 < 0:
            return []
        out, d = [d0], self.nxt[d0]
        while d != d0:
            out.append(d)
            d = self.nxt[d]
        return out

    def _insert_before(self, d_new: int, d_at: int) -> None:
        a = self.prv[d_at]
        self.nxt[a] = d_new
        self.prv[d_new] = a
        self.nxt[d_new] = d_at
        self.prv[d_at] = d_new

    def add_edge(self, before_u: int, before_v: int, length: float, artificial: bool) -> int:
        """New edge between the corners just before darts ``before_u`` and ``before_v``."""
        x = len(self.origin)
        u, v = self.origin[before_u], self.origin[before_v]
        self.origin += [u, v]
        self.nxt += [x, x + 1]
        self.prv += [x, x + 1]
        self.length += [length, length]
        self.artificial += [artificial, artificial]
        self.alive += [True, True]
        self._insert_before(x, before_u)
        self._insert_before(x + 1, before_v)
        self.deg[u] += 1
        self.deg[v] += 1
        return x

    def _unlink(self, d: int) -> None:
        v = self.origin[d]
        a, b = self.prv[d], self.nxt[d]
        if a == d:
            self.first[v] = -1
        else:
            self.nxt[a] = b
            self.prv[b] = a
            if self.first[v] == d:
                self.first[v] = b
        self.deg[v] -= 1

    def remove_edge(self, d: int) -> None:
        for e in (d, d ^ 1):
            self._unlink(e)
            self.alive[e] = False

    def contract(self, d: int) -> None:
        """Merge the head of ``d`` into its origin; the other darts of the head
        get the length of ``d`` added. Self-loops created are removed."""
        x, t = self.origin[d], d ^ 1
        c = self.origin[t]
        if c == x:
            raise EmbeddingSpliceFailure("cannot contract a self-loop")
        add = self.length[d]
        moved = [e for e in self.darts_at(c) if e != t]
        for e in moved:
            self.origin[e] = x
            self.length[e] += add
            self.length[e ^ 1] += add
        a, b = self.prv[d], self.nxt[d]
        if moved:
            c1, ck = self.nxt[t], self.prv[t]
            if a == d:
                self.nxt[ck] = c1
                self.prv[c1] = ck
            else:
                self.nxt[a] = c1
                self.prv[c1] = a
                self.nxt[ck] = b
                self.prv[b] = ck
            self.first[x] = c1 if a == d else b
        else:
            if a == d:
                self.first[x] = -1
            else:
                self.nxt[a] = b
                self.prv[b] = a
                self.first[x] = b
        self.deg[x] += len(moved) - 1
        self.alive[d] = self.alive[t] = False
        self.vertex_alive[c] = False
        self.first[c] = -1
        self.deg[c] = 0
        for e in moved:
            if self.alive[e] and self.origin[e ^ 1] == x:
                self.remove_edge(e)

    def freeze(self, drop_dead_vertices: bool = True):
        """Compact into an :class:`EmbeddedGraph`; returns (graph, vertex_of, dart_of)."""
        alive = np.asarray(self.alive, dtype=bool)
        dart_of = np.flatnonzero(alive)
        new_dart = np.full(alive.shape[0], -1, np.int64)
        new_dart[dart_of] = np.arange(dart_of.shape[0])
        vmask = np.asarray(self.vertex_alive, dtype=bool)
        if not drop_dead_vertices:
            vmask[:] = True
        vertex_of = np.flatnonzero(vmask)
        new_vertex = np.full(self.n, -1, np.int64)
        new_vertex[vertex_of] = np.arange(vertex_of.shape[0])
        origin = np.asarray(self.origin, dtype=np.int64)[dart_of]
        g = EmbeddedGraph(
            n=int(vertex_of.shape[0]),
            origin=new_vertex[origin],
            twin=np.arange(dart_of.shape[0], dtype=np.int64) ^ 1,
            nxt=new_dart[np.asarray(self.nxt, dtype=np.int64)[dart_of]],
            length=np.asarray(self.length, dtype=np.float64)[dart_of],
            artificial=np.asarray(self.artificial, dtype=bool)[dart_of],
            marked=np.asarray(self.marked, dtype=bool)[vertex_of],
            label=np.asarray(self.label, dtype=np.int64)[vertex_of],
        )
        return g, vertex_of, dart_of


# ---------------------------------------------------------------------------
# transformations
# ---------------------------------------------------------------------------


def triangulate(g: EmbeddedGraph) -> tuple[EmbeddedGraph, set]:
    """Fan-triangulate every face from its smallest vertex with artificial edges.

    Faces of two darts (digons) cannot be split without self-loops and are
    left alone; every other face ends with exactly three darts.
    """
    if not is_connected(g):
        raise NotConnected("triangulate needs a connected graph")
    fid, nf = g.face_index
    m = g.num_darts
    start = np.full(nf, -1, np.int64)
    start[fid[::-1]] = np.arange(m - 1, -1, -1)
    sizes = np.bincount(fid, minlength=nf)
    big = np.flatnonzero(sizes > 3)
    cap = m + 2 * int(np.sum(sizes[big] - 3))
    origin = np.empty(cap, np.int64)
    origin[:m] = g.origin
    nxt = np.empty(cap, np.int64)
    nxt[:m] = g.nxt
    prv = np.empty(cap, np.int64)
    prv[g.nxt] = np.arange(m)
    total = _kernels.fan_triangulate(origin, nxt, prv, m, start[big], sizes[big].astype(np.int64))
    art = np.ones(total, bool)
    art[:m] = g.artificial
    length = np.zeros(total)
    length[:m] = g.length
    out = EmbeddedGraph(n=g.n, origin=origin[:total].copy(), twin=np.arange(total, dtype=np.int64) ^ 1,
                        nxt=nxt[:total].copy(), length=length, artificial=art,
                        marked=g.marked.copy(), label=g.label.copy())
    return out, set(range(m, total))


def contract_degree2(g: EmbeddedGraph, keep=()) -> EmbeddedGraph:
    return contract_degree2_map(g, keep)[0]


def contract_degree2_map(g: EmbeddedGraph, keep=()):
    """Suppress degree-2 vertices outside ``keep`` whose two neighbours differ.

    Returns (graph, vertex_of) where ``vertex_of`` maps to input vertex ids.
    """
    keep_mask = np.zeros(g.n, bool)
    if isinstance(keep, np.ndarray) and keep.dtype == bool:
        keep_mask[:] = keep
    else:
        keep_mask[np.asarray(list(keep), dtype=np.int64)] = True
    cand = np.flatnonzero((g.degree == 2) & ~keep_mask)
    if cand.size == 0:
        return g, np.arange(g.n)
    mg = MutableGraph(g)
    for v in cand.tolist():
        if mg.deg[v] != 2:
            continue
        a = mg.first[v]
        b = mg.nxt[a]
        x, y = mg.head(a), mg.head(b)
        if x == v or y == v or x == y:
            continue
        mg.contract(a ^ 1)
    out, vertex_of, _ = mg.freeze()
    return out, vertex_of


def simplify(g: EmbeddedGraph) -> tuple[EmbeddedGraph, np.ndarray]:
    """Keep one shortest edge per vertex pair (lowest id on ties).

    Returns the graph and the kept input dart ids; vertices are unchanged.
    """
    if g.num_edges == 0:
        return g, np.arange(0)
    u, v = g.origin[0::2], g.origin[1::2]
    lo, hi = np.minimum(u, v), np.maximum(u, v)
    eid = np.arange(g.num_edges)
    order = np.lexsort((eid, g.length[0::2], hi, lo))
    first = np.r_[True, (lo[order][1:] != lo[order][:-1]) | (hi[order][1:] != hi[order][:-1])]
    keep_e = np.zeros(g.num_edges, bool)
    keep_e[order[first]] = True
    if keep_e.all():
        return g, np.arange(g.num_darts)
    r = restrict(g, np.repeat(keep_e, 2), np.ones(g.n, bool))
    return r.graph, r.dart_of
