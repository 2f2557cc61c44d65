"""Seeded instance generators."""

from __future__ import annotations

import numpy as np

from ..graph import EmbeddedGraph, from_arrays, rotations_from_coordinates


def _weights(rng, count, weight_range):
    lo, hi = weight_range
    return rng.integers(int(lo), int(hi) + 1, size=count).astype(np.float64)


def grid_edges(w: int, h: int) -> np.ndarray:
    """Edge endpoints of a w-by-h grid, horizontal edges first; vertex ``r*w + c``."""
    idx = np.arange(w * h).reshape(h, w)
    horiz = np.stack([idx[:, :-1].ravel(), idx[:, 1:].ravel()], axis=1)
    vert = np.stack([idx[:-1, :].ravel(), idx[1:, :].ravel()], axis=1)
    return np.concatenate([horiz, vert]).astype(np.int64)


def gen_grid(w: int, h: int, weight_range=(1, 1), seed: int = 0) -> EmbeddedGraph:
    """w-by-h grid with independent uniform integer lengths in ``weight_range``."""
    if w < 1 or h < 1:
        raise ValueError("grid sides must be at least 1")
    rng = np.random.default_rng(seed)
    ends = grid_edges(w, h)
    origin = ends.ravel()
    length = np.repeat(_weights(rng, ends.shape[0], weight_range), 2)
    ys, xs = np.divmod(np.arange(w * h), w)
    coords = np.stack([xs, ys], axis=1)
    return from_arrays(w * h, origin, rotations_from_coordinates(origin, coords), length)


def gen_face_split(n: int, weight_range=(1, 1), seed: int = 0) -> EmbeddedGraph:
    """Random maximal planar graph: split a uniformly random face until n vertices."""
    if n < 3:
        raise ValueError("face-split graphs need n >= 3")
    rng = np.random.default_rng(seed)
    origin = [0, 1, 1, 2, 2, 0]
    nxt = [5, 2, 1, 4, 3, 0]
    faces = [0, 1]

    def fs(d):
        return nxt[d ^ 1]

    def after(at, new):
        nxt[new] = nxt[at]
        nxt[at] = new

    for v in range(3, n):
        i = int(rng.integers(len(faces)))
        d1 = faces[i]
        d2 = fs(d1)
        d3 = fs(d2)
        a, b, c = origin[d1], origin[d2], origin[d3]
        base = len(origin)
        # darts: a->v, v->a, b->v, v->b, c->v, v->c
        origin += [a, v, b, v, c, v]
        nxt += [-1] * 6
        av, va, bv, vb, cv, vc = range(base, base + 6)
        after(d3 ^ 1, av)
        after(d1 ^ 1, bv)
        after(d2 ^ 1, cv)
        nxt[va], nxt[vc], nxt[vb] = vc, vb, va
        faces[i] = d1
        faces += [d2, d3]
    origin = np.asarray(origin, np.int64)
    length = np.repeat(_weights(rng, origin.shape[0] // 2, weight_range), 2)
    return from_arrays(n, origin, np.asarray(nxt, np.int64), length)


def gen_path(m: int, length: float = 1.0) -> EmbeddedGraph:
    """Path on m + 1 vertices."""
    origin = np.repeat(np.arange(m + 1), 2)[1:-1] if m else np.zeros(0, np.int64)
    return from_arrays(m + 1, origin, _path_like_nxt(origin), np.full(2 * m, float(length)))


def gen_star(k: int, length: float = 1.0) -> EmbeddedGraph:
    """Star with centre 0 and k unit spokes."""
    origin = np.zeros(2 * k, np.int64)
    origin[1::2] = np.arange(1, k + 1)
    return from_arrays(k + 1, origin, _path_like_nxt(origin), np.full(2 * k, float(length)))


def _path_like_nxt(origin):
    # any cyclic order is planar for a tree
    order = np.argsort(origin, kind="stable")
    nxt = np.empty(origin.shape[0], np.int64)
    o = origin[order]
    succ = np.roll(order, -1)
    if order.size:
        starts = np.flatnonzero(np.r_[True, o[1:] != o[:-1]])
        ends = np.r_[starts[1:] - 1, order.size - 1]
        succ[ends] = order[starts]
    nxt[order] = succ
    return nxt
