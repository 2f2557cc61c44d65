"""Oracle-checked sweeps and runtime benchmarks."""

from __future__ import annotations

import csv
from dataclasses import asdict, dataclass, replace
import io
import json
import time

import numpy as np

from ..driver import RunConfig, approximate_diameter
from ..oracle import exact_diameter
from .generators import gen_face_split, gen_grid

TOL = 1e-9


@dataclass
class SweepRecord:
    generator: str
    n: int
    seed: int
    eps: float
    d_exact: float
    d_prime: float
    ratio: float
    t_approx: float
    t_exact: float
    nodes: int
    max_depth: int
    leaves: int
    guard_trips: int

    @property
    def ok(self) -> bool:
        return within(self.d_exact, self.d_prime, self.eps)


def within(d: float, d_prime: float, eps: float) -> bool:
    """The sandwich ``d <= d' <= (1 + eps) d`` up to float noise."""
    slack = TOL * max(1.0, abs(d))
    return d - slack <= d_prime <= (1 + eps) * d + slack


def make_instance(generator: str, n: int, seed: int, weights=(1, 100)):
    """Grid with about n vertices (near-square) or a face-split graph on n vertices."""
    if generator == "grid":
        w = max(1, int(round(np.sqrt(n))))
        h = max(1, int(round(n / w)))
        return gen_grid(w, h, weights, seed)
    if generator == "face-split":
        return gen_face_split(max(3, n), weights, seed)
    raise ValueError(f"unknown generator {generator!r}")


def instance_sizes(count: int, n_min: int, n_max: int, seed: int) -> list[int]:
    rng = np.random.default_rng(seed)
    return rng.integers(n_min, n_max + 1, size=count).tolist()


def run_one(generator: str, n: int, seed: int, eps: float, cfg: RunConfig | None = None,
            weights=(1, 100)) -> SweepRecord:
    g = make_instance(generator, n, seed, weights)
    cfg = replace(cfg or RunConfig(seed=seed), eps_user=eps)
    t0 = time.perf_counter()
    rep = approximate_diameter(g, cfg)
    t1 = time.perf_counter()
    d = exact_diameter(g)
    t2 = time.perf_counter()
    ratio = rep.d_prime / d if d > 0 else 1.0
    return SweepRecord(generator, g.n, seed, eps, d, rep.d_prime, ratio, t1 - t0, t2 - t1,
                       rep.node_count, rep.max_depth, rep.leaf_apsp_count, rep.guard_trips)


def verify(generator: str, count: int, eps: float, n_min: int = 50, n_max: int = 2000,
           seed: int = 0, cfg: RunConfig | None = None, weights=(1, 100)) -> list[SweepRecord]:
    sizes = instance_sizes(count, n_min, n_max, seed)
    return [run_one(generator, n, seed + i, eps, cfg, weights) for i, n in enumerate(sizes)]


@dataclass
class BenchRow:
    generator: str
    n: int
    seconds: float
    growth: float
    nodes: int
    d_prime: float


def bench(sizes, generator: str = "grid", eps: float = 0.7, seed: int = 0,
          cfg: RunConfig | None = None, weights=(1, 100), budget: float | None = None) -> list[BenchRow]:
    """Time one run per size; ``growth`` is the ratio to the previous size's time.

    Stops early when ``budget`` seconds have been spent.
    """
    rows, prev, spent = [], None, 0.0
    cfg = replace(cfg or RunConfig(seed=seed), eps_user=eps)
    for n in sizes:
        g = make_instance(generator, n, seed, weights)
        t0 = time.perf_counter()
        rep = approximate_diameter(g, cfg)
        dt = time.perf_counter() - t0
        spent += dt
        rows.append(BenchRow(generator, g.n, dt, dt / prev if prev else float("nan"),
                             rep.node_count, rep.d_prime))
        prev = dt
        if budget is not None and spent > budget:
            break
    return rows


def to_csv(records) -> str:
    buf = io.StringIO()
    rows = [asdict(r) for r in records]
    if not rows:
        return ""
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def to_jsonl(records) -> str:
    return "".join(json.dumps(asdict(r), sort_keys=True) + "\n" for r in records)
