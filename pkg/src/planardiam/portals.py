"""Portal selection along separator paths by a distance-threshold walk."""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .errors import BadEpsilon, EmptyPath, OutsidePrefix


@dataclass(frozen=True)
class Epsilon:
    """User accuracy split into the working constants.

    ``eps_user`` must lie in (0, 0.7]. The working epsilon is a seventh of
    it, and ``k`` is the smallest integer with ``1/k`` no larger than that,
    so ``eff = 1/k`` never exceeds the working epsilon.
    """

    eps_user: float
    k: int
    eff: float

    @classmethod
    def from_user(cls, eps_user: float) -> Epsilon:
        eps_user = float(eps_user)
        if not (0.0 < eps_user <= 0.7):
            raise BadEpsilon(f"eps must lie in (0, 0.7], got {eps_user}")
        k = math.ceil(round(7.0 / eps_user, 9))
        return cls(eps_user, k, 1.0 / k)


def log2n(n_orig: int) -> float:
    return max(math.log2(max(n_orig, 1)), 1.0)


def regular_spacing(eps: Epsilon, x: float) -> float:
    return eps.eff * x


def dense_spacing(eps: Epsilon, x: float, n_orig: int) -> float:
    return eps.eff * x / (16.0 * log2n(n_orig))


@dataclass(frozen=True)
class PortalSet:
    """Portals on one or two paths sharing the root.

    ``on_path[i]`` is ``(path index, position)`` of portal ``i``; the root
    appears once with path index 0.
    """

    portals: list
    on_path: list
    prefix_dist: list
    spacing: float
    prefix_cap: float

    def __len__(self):
        return len(self.portals)


def walk(cum, spacing: float, cap: float, forced=()) -> list[int]:
    """Positions chosen by the threshold walk.

    Position 0 is always chosen; afterwards a vertex is chosen once its
    distance from the last chosen one exceeds ``spacing``. The walk stops at
    the first vertex whose distance exceeds ``cap``. Positions in ``forced``
    are chosen regardless and restart the spacing count.
    """
    if len(cum) == 0:
        raise EmptyPath("path has no vertices")
    forced = set(forced)
    chosen = [0]
    last = cum[0]
    for i in range(1, len(cum)):
        c = cum[i]
        if c > cap:
            break
        if spacing <= 0 or c - last > spacing or i in forced:
            chosen.append(i)
            last = c
    return chosen


def select_portals(path, cum, spacing: float, prefix_cap: float, forced=(), which: int = 0) -> PortalSet:
    """Portal fragment on a single path with cumulative distances ``cum``."""
    idx = walk(cum, spacing, prefix_cap, forced)
    return PortalSet([path[i] for i in idx], [(which, i) for i in idx],
                     [float(cum[i]) for i in idx], float(spacing), float(prefix_cap))


def path_cumulative(dist: np.ndarray, path) -> list[float]:
    """Cumulative distances along a shortest path from its root."""
    return [float(dist[v]) for v in path]


def select_on_separator(dist, P, Q, spacing: float, cap: float, fork=None) -> PortalSet:
    """Portals on both separator paths; the root is shared.

    When ``fork`` is given it is forced to be a portal on both walks, so
    every branch of the separator starts at a portal.
    """
    portals, on_path, pd = [], [], []
    seen = set()
    for which, path in enumerate((P, Q)):
        forced = (path.index(fork),) if fork is not None and fork in path else ()
        frag = select_portals(path, path_cumulative(dist, path), spacing, cap, forced, which)
        for v, op, d in zip(frag.portals, frag.on_path, frag.prefix_dist):
            if v in seen:
                continue
            seen.add(v)
            portals.append(v)
            on_path.append(op)
            pd.append(d)
    return PortalSet(portals, on_path, pd, float(spacing), float(cap))


def nearest_portal_before(ps: PortalSet, path, cum, vertex) -> int:
    """Last portal on ``path`` at or before ``vertex`` walking from the root."""
    try:
        pos = path.index(vertex)
    except ValueError:
        raise OutsidePrefix(f"vertex {vertex} is not on the path") from None
    if cum[pos] > ps.prefix_cap:
        raise OutsidePrefix(f"vertex {vertex} lies beyond the prefix cap")
    members = set(ps.portals)
    for i in range(pos, -1, -1):
        if path[i] in members:
            return path[i]
    raise OutsidePrefix(f"no portal before vertex {vertex}")


def count_on_path(ps: PortalSet, path) -> int:
    """Number of portals lying on ``path``."""
    members = set(ps.portals)
    return sum(1 for v in path if v in members)


def coverage_gap(ps: PortalSet, path, cum) -> float:
    """Largest path distance from a prefix vertex back to its portal."""
    members = set(ps.portals)
    gap, last = 0.0, cum[0]
    for i, v in enumerate(path):
        if cum[i] > ps.prefix_cap:
            break
        if v in members:
            last = cum[i]
        gap = max(gap, cum[i] - last)
    return gap
