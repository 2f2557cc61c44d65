"""Cross-separator distances through portals.

Every marked vertex on either side is summarised by its tuple of
distances to the portals. A cross pair's portal-routed distance is the
minimum over portals of the two tuple entries' sum, and the cross value is
the largest such minimum. Rounding entries up to multiples of a unit
leaves few distinct tuples, so deduplicating them first keeps the
max-min scan small.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptySide, NoPortals, ZeroScale
from .graph import EmbeddedGraph
from .paths import distance_rows


@dataclass(frozen=True)
class TripartiteInstance:
    """Portal-distance tuples (one row per marked vertex) for both sides."""

    left_ids: np.ndarray
    left: np.ndarray
    right_ids: np.ndarray
    right: np.ndarray
    ell: float
    k: int

    @property
    def unit(self) -> float:
        return self.ell / self.k

    @property
    def portal_count(self) -> int:
        return int(self.left.shape[1])


@dataclass(frozen=True)
class RoundedInstance:
    left: np.ndarray
    right: np.ndarray
    unit: float
    ell: float
    left_ids: np.ndarray = field(default=None)
    right_ids: np.ndarray = field(default=None)


@dataclass
class EngineStats:
    distinct_left: int = 0
    distinct_right: int = 0
    pairs_scanned: int = 0


def build_tripartite(g: EmbeddedGraph, portals, inside, outside, k: int) -> TripartiteInstance:
    """Tuples for marked vertices of ``inside`` (left) and ``outside`` (right).

    One shortest-path search per portal over all of ``g``.
    """
    portals = np.asarray(list(portals), dtype=np.int64)
    if portals.size == 0:
        raise NoPortals("at least one portal is required")
    rows = distance_rows(g, portals)

    def side(vs):
        mask = np.zeros(g.n, bool)
        mask[np.asarray(list(vs), dtype=np.int64)] = True
        ids = np.flatnonzero(mask & g.marked)
        return ids, np.ascontiguousarray(rows[:, ids].T)

    lid, left = side(inside)
    rid, right = side(outside)
    both = [a for a in (left, right) if a.size]
    ell = float(max(a.max() for a in both)) if both else 0.0
    if both and not np.isfinite(ell):
        raise ValueError("a portal cannot reach a marked vertex; graph is disconnected")
    return TripartiteInstance(lid, left, rid, right, ell, int(k))


def round_instance(t: TripartiteInstance, k: int | None = None) -> RoundedInstance:
    """Round every entry up to a multiple of ``ell / k``; results lie in 1..k."""
    k = t.k if k is None else int(k)
    if t.ell <= 0:
        raise ZeroScale("all tuple entries are zero")
    unit = t.ell / k

    def rnd(a):
        r = np.ceil(a / unit)
        # guard float noise so that (r-1)*unit < a <= r*unit holds exactly
        r = np.where(r * unit < a, r + 1, r)
        r = np.where((r - 1) * unit >= a, r - 1, r)
        return np.clip(r, 1, k).astype(np.int64)

    return RoundedInstance(rnd(t.left), rnd(t.right), unit, t.ell, t.left_ids, t.right_ids)


def _sides(r: RoundedInstance):
    if r.left.shape[0] == 0 or r.right.shape[0] == 0:
        raise EmptySide("both sides need at least one tuple")
    return r.left, r.right


def maxmin_reference(r: RoundedInstance) -> int:
    """Direct double loop over all pairs."""
    left, right = _sides(r)
    best = -1
    for a in left:
        best = max(best, int(np.min(a[None, :] + right, axis=1).max()))
    return best


def maxmin_engine(r: RoundedInstance, stats: EngineStats | None = None, block: int = 4096):
    """Max over pairs of the min over portals of the summed entries.

    Returns ``(value, (i, j))`` where ``i``, ``j`` index rows of the left and
    right tuples attaining the value.
    """
    left, right = _sides(r)
    ul, li = np.unique(left, axis=0, return_index=True)
    ur, ri = np.unique(right, axis=0, return_index=True)
    if stats is not None:
        stats.distinct_left, stats.distinct_right = ul.shape[0], ur.shape[0]
    # upper bound for a left tuple: min over portals of (entry + largest right entry)
    col_max = ur.max(axis=0)
    ub = (ul + col_max[None, :]).min(axis=1)
    order = np.argsort(-ub, kind="stable")
    best, wit = -1, (0, 0)
    rows = max(1, block // max(1, ur.shape[0]))
    scanned = 0
    for s in range(0, order.size, rows):
        idx = order[s:s + rows]
        if ub[idx[0]] <= best:
            break
        chunk = ul[idx]
        mins = np.min(chunk[:, None, :] + ur[None, :, :], axis=2)
        scanned += mins.size
        flat = int(np.argmax(mins))
        a, b = divmod(flat, ur.shape[0])
        if mins[a, b] > best:
            best = int(mins[a, b])
            wit = (int(li[idx[a]]), int(ri[b]))
    if stats is not None:
        stats.pairs_scanned = scanned
    return best, wit


@dataclass(frozen=True)
class CrossResult:
    value: float
    witness: tuple | None
    ell: float
    distinct: tuple


def cross_diameter(g: EmbeddedGraph, portals, inside, outside, x: float, k: int) -> CrossResult:
    """Approximate largest marked inside-to-outside distance.

    Zero when every tuple entry is zero, when ``x`` exceeds twice the
    largest entry (such pairs are below ``x`` and cannot matter), or when a
    side has no marked vertex.
    """
    t = build_tripartite(g, portals, inside, outside, k)
    if t.left.shape[0] == 0 or t.right.shape[0] == 0 or t.ell <= 0 or x > 2 * t.ell:
        return CrossResult(0.0, None, t.ell, (0, 0))
    r = round_instance(t)
    stats = EngineStats()
    value, (i, j) = maxmin_engine(r, stats)
    exact = float(np.min(t.left[i] + t.right[j]))
    d1 = max(value * r.unit, exact)
    return CrossResult(d1, (int(t.left_ids[i]), int(t.right_ids[j])), t.ell,
                       (stats.distinct_left, stats.distinct_right))


def unrounded_value(t: TripartiteInstance) -> float:
    """Max over pairs of the min over portals, on the raw distances."""
    best = 0.0
    for a in t.left:
        best = max(best, float(np.min(a[None, :] + t.right, axis=1).max()))
    return best
