"""Command line entry point: ``planardiam {approx,exact,gen,verify,bench}``."""

from __future__ import annotations

import argparse
import json
import os
from pathlib import Path
import sys

from .driver import RunConfig, approximate_diameter
from .errors import PlanarDiamError
from .harness import sweep
from .harness.generators import gen_face_split, gen_grid
from .harness.io import graph_to_doc, read_graph
from .oracle import exact_diameter

SEED_ENV = "PLANARDIAM_SEED"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--halt-size", type=int, default=64, help="answer graphs this small exactly")
    p.add_argument("--depth-cap", type=int, default=None, help="default ceil(1.8 log2 n)")
    p.add_argument("--progress-ratio", type=float, default=0.95)
    p.add_argument("--seed", type=int, default=None, help=f"default ${SEED_ENV} or 0")
    p.add_argument("--paper-halt", action="store_true",
                   help="halt at (256 log2 n / eps)^4 vertices instead of --halt-size")
    p.add_argument("--perturb", action="store_true", help="seeded tiny length perturbation")
    p.add_argument("--debug", action="store_true", help="validate every intermediate embedding")


def _config(args, eps: float) -> RunConfig:
    return RunConfig(eps_user=eps, halt_size=args.halt_size, depth_cap=args.depth_cap,
                     progress_ratio=args.progress_ratio, seed=args.seed,
                     perturbation=args.perturb, paper_halt_rule=args.paper_halt, debug=args.debug)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planardiam",
                                     description="Approximate diameters of weighted planar graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("approx", help="approximate the diameter of a graph file")
    p.add_argument("file")
    p.add_argument("--eps", type=float, required=True, help="accuracy in (0, 0.7]")
    p.add_argument("--json", action="store_true", help="print the full run report")
    p.add_argument("--timings", action="store_true", help="include wall times in the report")
    _add_run_flags(p)

    p = sub.add_parser("exact", help="exact diameter by all-pairs search")
    p.add_argument("file")
    p.add_argument("--method", choices=("scipy", "label-correcting"), default="scipy")

    p = sub.add_parser("gen", help="write a generated instance as JSON")
    p.add_argument("kind", choices=("grid", "face-split"))
    p.add_argument("--w", type=int, default=10)
    p.add_argument("--h", type=int, default=10)
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--weights", type=int, nargs=2, default=(1, 1), metavar=("LO", "HI"))
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", help="output file (default stdout)")

    p = sub.add_parser("verify", help="oracle-checked sweep; exit 2 on any violation")
    p.add_argument("--gen", choices=("grid", "face-split"), required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--eps", type=float, nargs="+", required=True)
    p.add_argument("--n-min", type=int, default=50)
    p.add_argument("--n-max", type=int, default=2000)
    p.add_argument("--weights", type=int, nargs=2, default=(1, 100), metavar=("LO", "HI"))
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--out", help="records file; a PNG figure is written next to it")
    _add_run_flags(p)

    p = sub.add_parser("bench", help="runtime scaling table")
    p.add_argument("--sizes", type=int, nargs="+", required=True)
    p.add_argument("--gen", choices=("grid", "face-split"), default="grid")
    p.add_argument("--eps", type=float, default=0.7)
    p.add_argument("--weights", type=int, nargs=2, default=(1, 100), metavar=("LO", "HI"))
    p.add_argument("--budget", type=float, default=None, help="stop after this many seconds")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--out", help="table file; a PNG figure is written next to it")
    _add_run_flags(p)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_approx(args) -> int:
    g = read_graph(args.file)
    rep = approximate_diameter(g, _config(args, args.eps))
    if args.json:
        print(json.dumps(rep.to_dict(timings=args.timings), sort_keys=True))
    else:
        print(f"{rep.d_prime:.12g}")
    return 0


def _cmd_exact(args) -> int:
    g = read_graph(args.file)
    print(f"{exact_diameter(g, method=args.method):.12g}")
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "grid":
        g = gen_grid(args.w, args.h, tuple(args.weights), args.seed)
    else:
        g = gen_face_split(args.n, tuple(args.weights), args.seed)
    _emit(json.dumps(graph_to_doc(g)) + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    from .harness.plots import ratio_figure

    records = []
    for eps in args.eps:
        records += sweep.verify(args.gen, args.count, eps, args.n_min, args.n_max, args.seed,
                                _config(args, eps), tuple(args.weights))
    text = sweep.to_csv(records) if args.format == "csv" else sweep.to_jsonl(records)
    _emit(text, args.out)
    if args.out:
        ratio_figure(records, Path(args.out).with_suffix(".png"))
    bad = [r for r in records if not r.ok]
    for r in bad:
        print(f"violation: {args.gen} n={r.n} seed={r.seed} eps={r.eps} "
              f"exact={r.d_exact} approx={r.d_prime}", file=sys.stderr)
    return 2 if bad else 0


def _cmd_bench(args) -> int:
    from .harness.plots import bench_figure

    rows = sweep.bench(args.sizes, args.gen, args.eps, args.seed, _config(args, args.eps),
                       tuple(args.weights), args.budget)
    text = sweep.to_csv(rows) if args.format == "csv" else sweep.to_jsonl(rows)
    _emit(text, args.out)
    if args.out:
        bench_figure(rows, Path(args.out).with_suffix(".png"))
    return 0


COMMANDS = {"approx": _cmd_approx, "exact": _cmd_exact, "gen": _cmd_gen,
            "verify": _cmd_verify, "bench": _cmd_bench}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", 0) is None:
        args.seed = _default_seed()
    try:
        return COMMANDS[args.command](args)
    except (PlanarDiamError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
