"""Recursive approximation of the marked-set diameter.

Each call splits its graph with a shortest-path separator, answers the
pairs that cross the separator through portals, unmarks the separator and
recurses on a reduced copy of each side. Small graphs, deep calls and
calls that fail to shrink are answered exactly.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
import math
import time
from typing import Callable

import numpy as np

from .cross import cross_diameter
from .errors import NotConnected
from .graph import EmbeddedGraph, check, drop_artificial, is_connected, triangulate
from .paths import apsp_marked, bootstrap_x, perturb
from .portals import Epsilon, log2n, regular_spacing, select_on_separator
from .reducer import Side, dense_portals, glue_and_shrink
from .separator import find_separator


@dataclass(frozen=True)
class RunConfig:
    eps_user: float = 0.7
    halt_size: int = 64
    depth_cap: int | None = None
    progress_ratio: float = 0.95
    seed: int = 0
    perturbation: bool = False
    paper_halt_rule: bool = False
    debug: bool = False

    def resolved_depth_cap(self, n: int) -> int:
        if self.depth_cap is not None:
            return int(self.depth_cap)
        return max(1, math.ceil(1.8 * log2n(n)))


@dataclass
class RunReport:
    d_prime: float = 0.0
    x: float = 0.0
    n: int = 0
    eps_user: float = 0.0
    k: int = 0
    node_count: int = 0
    max_depth: int = 0
    leaf_apsp_count: int = 0
    guard_trips: int = 0
    depth_cap_hits: int = 0
    level_sizes: list = field(default_factory=list)
    winner: str = "none"
    winner_depth: int = 0
    config: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def to_dict(self, timings: bool = False) -> dict:
        d = asdict(self)
        if not timings:
            d.pop("timings")
        return d


@dataclass
class _Context:
    eps: Epsilon
    x: float
    n_orig: int
    depth_cap: int
    halt: float
    cfg: RunConfig
    report: RunReport
    observer: Callable | None
    best: float = 0.0

    def tick(self, phase: str, t0: float) -> None:
        self.report.timings[phase] = self.report.timings.get(phase, 0.0) + time.perf_counter() - t0


def approximate_diameter(g: EmbeddedGraph, cfg: RunConfig | None = None,
                         observer: Callable | None = None) -> RunReport:
    """Approximate the largest distance between marked vertices of ``g``.

    ``observer(event, **data)`` is called at every recursion node and
    transformation when given; tests use it to audit intermediate graphs.
    """
    cfg = cfg or RunConfig()
    eps = Epsilon.from_user(cfg.eps_user)
    t_start = time.perf_counter()
    report = RunReport(n=g.n, eps_user=eps.eps_user, k=eps.k, config=_echo(cfg, g.n))
    if g.n == 0:
        return report
    if not is_connected(g, real_only=True):
        raise NotConnected("input graph must be connected")
    g = drop_artificial(g)
    if cfg.perturbation:
        g = perturb(g, cfg.seed)
    if not g.marked.any():
        return report
    t0 = time.perf_counter()
    x = bootstrap_x(g)
    report.x = x
    report.timings["bootstrap"] = time.perf_counter() - t0
    if x == 0:
        report.timings["total"] = time.perf_counter() - t_start
        return report
    halt = (256 * log2n(g.n) / eps.eff) ** 4 if cfg.paper_halt_rule else cfg.halt_size
    ctx = _Context(eps, x, g.n, cfg.resolved_depth_cap(g.n), halt, cfg, report, observer)
    report.d_prime = _recurse(g, 0, ctx)
    report.timings["total"] = time.perf_counter() - t_start
    return report


def _echo(cfg: RunConfig, n: int) -> dict:
    d = asdict(cfg)
    d["depth_cap"] = cfg.resolved_depth_cap(n) if n else cfg.depth_cap
    return d


def _leaf(g: EmbeddedGraph, depth: int, ctx: _Context, reason: str) -> float:
    t0 = time.perf_counter()
    value = apsp_marked(g)
    ctx.tick("leaf_apsp", t0)
    ctx.report.leaf_apsp_count += 1
    _note(ctx, value, f"leaf:{reason}", depth)
    if ctx.observer:
        ctx.observer("leaf", graph=g, depth=depth, value=value, reason=reason)
    return value


def _note(ctx: _Context, value: float, what: str, depth: int) -> None:
    if value > ctx.best:
        ctx.best = value
        ctx.report.winner = what
        ctx.report.winner_depth = depth


def _recurse(g: EmbeddedGraph, depth: int, ctx: _Context) -> float:
    rep = ctx.report
    rep.node_count += 1
    rep.max_depth = max(rep.max_depth, depth)
    while len(rep.level_sizes) <= depth:
        rep.level_sizes.append(0)
    rep.level_sizes[depth] += g.n
    if ctx.observer:
        ctx.observer("node", graph=g, depth=depth)

    marked = np.flatnonzero(g.marked)
    if marked.size < 2:
        return 0.0
    if g.n <= ctx.halt:
        return _leaf(g, depth, ctx, "size")
    if depth >= ctx.depth_cap:
        rep.depth_cap_hits += 1
        return _leaf(g, depth, ctx, "depth")

    debug = ctx.cfg.debug
    t0 = time.perf_counter()
    t, _ = triangulate(g)
    ctx.tick("triangulate", t0)
    if debug:
        check(t, "triangulate")
    if ctx.observer:
        ctx.observer("triangulated", graph=t, depth=depth)

    t0 = time.perf_counter()
    v1 = int(marked[0])
    dec = find_separator(t, v1)
    ctx.tick("separator", t0)
    if dec.cycle_edge < 0:
        return _leaf(g, depth, ctx, "trivial")

    t0 = time.perf_counter()
    x = ctx.x
    regular = select_on_separator(dec.tree.dist, dec.P, dec.Q, regular_spacing(ctx.eps, x), 8.0 * x)
    inside = np.flatnonzero(dec.side != 1)
    outside = np.flatnonzero(dec.side != 0)
    cr = cross_diameter(t, regular.portals, inside, outside, x, ctx.eps.k)
    d1 = cr.value
    ctx.tick("cross", t0)
    _note(ctx, d1, "cross", depth)

    t0 = time.perf_counter()
    tu = t.with_marks(t.marked & (dec.side != 2))
    dense = dense_portals(t, dec, ctx.eps, x, ctx.n_orig)
    ctx.tick("portals", t0)
    if ctx.observer:
        ctx.observer("separator", graph=t, depth=depth, dec=dec, regular=regular, dense=dense,
                     cross=cr)

    best = d1
    for which in (Side.IN, Side.OUT):
        if not np.any(tu.marked & (dec.side == which)):
            continue
        t0 = time.perf_counter()
        red = glue_and_shrink(tu, dec, which, dense, debug=debug)
        ctx.tick("reduce", t0)
        child = red.result
        if ctx.observer:
            ctx.observer("reduced", graph=child, depth=depth, parent=tu, side=which, reduction=red,
                         dec=dec)
        if child.n > ctx.cfg.progress_ratio * g.n:
            rep.guard_trips += 1
            value = _leaf(child, depth + 1, ctx, "guard")
        else:
            value = _recurse(child, depth + 1, ctx)
        best = max(best, value)
    return best
