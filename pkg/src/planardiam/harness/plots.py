"""Static figures for sweep and benchmark output (written to files, never shown)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def ratio_figure(records, path) -> Path:
    """Approximation ratio against n, one marker series per epsilon."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for eps in sorted({r.eps for r in records}):
        rs = [r for r in records if r.eps == eps]
        ax.scatter([r.n for r in rs], [r.ratio for r in rs], s=12, label=f"eps = {eps:g}")
        ax.axhline(1 + eps, linestyle="--", linewidth=0.8, color="grey")
    ax.axhline(1.0, linewidth=0.8, color="black")
    ax.set_xlabel("vertices")
    ax.set_ylabel("approximate / exact diameter")
    ax.legend(frameon=False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def bench_figure(rows, path) -> Path:
    """Wall time against n on log-log axes, with an n log n reference."""
    n = np.array([r.n for r in rows], dtype=float)
    t = np.array([r.seconds for r in rows])
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.loglog(n, t, "o-", label="measured")
    if n.size:
        ref = n * np.log2(n)
        ax.loglog(n, ref * t[0] / ref[0], ":", color="grey", label="n log n (scaled)")
    ax.set_xlabel("vertices")
    ax.set_ylabel("seconds")
    ax.legend(frameon=False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
