"""Command-line interface: ``kldiamond {compute,verify,export-dot,bench}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from .analysis import compute_report, select_pairs, sweep
from .coxeter import ConfigurationError, EmptyIntervalError, build_system
from .export import graph_to_dot, graph_to_json, reports_to_csv, reports_to_json, summary_dict
from .kl import KLContext
from .moment_graph import DEFAULT_BUDGET, build_interval_graph, g_min
from .sections import dim_V

log = logging.getLogger("kldiamond")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_pair(W, args):
    x, y = W.parse_word(args.x), W.parse_word(args.y)
    if not W.bruhat_leq(x, y):
        raise EmptyIntervalError(f"x = {args.x!r} is not below y = {args.y!r}")
    return x, y


def cmd_compute(args) -> int:
    W = build_system(args.group)
    x, y = _parse_pair(W, args)
    rep = compute_report(KLContext(W), x, y, budget=args.budget)
    if args.format == "csv":
        _emit(reports_to_csv([rep]), args.out)
    elif args.format == "dot":
        graph = build_interval_graph(W, x, y)
        res = g_min(graph, rep.d, budget=args.budget) if x != y else None
        _emit(graph_to_dot(graph, res.witness if res else None), args.out)
    else:
        _emit(json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n", args.out)
    return 1 if rep.failed else 0


def cmd_verify(args) -> int:
    sample = args.sample
    summary = sweep(
        args.group,
        max_ldiff=args.max_ldiff,
        sample=sample,
        seed=args.seed,
        budget=args.budget,
        workers=args.workers,
    )
    if args.format == "json":
        _emit(reports_to_json(summary.reports), args.out)
    else:
        _emit(reports_to_csv(summary.reports), args.out)
    if args.figures:
        from .plotting import write_sweep_figures

        for p in write_sweep_figures(summary.reports, Path(args.figures), summary.group):
            log.info("wrote %s", p)
    info = summary_dict(summary)
    print(json.dumps(info, sort_keys=True), file=sys.stderr)
    for rep in summary.reports:
        if rep.failed:
            print(f"FAILED {rep.group} x={rep.x!r} y={rep.y!r} error={rep.error}", file=sys.stderr)
    return 0 if summary.ok else 1


def cmd_export_dot(args) -> int:
    W = build_system(args.group)
    x, y = _parse_pair(W, args)
    graph = build_interval_graph(W, x, y)
    witness = None
    if args.witness and x != y:
        d = KLContext(W).d_coefficient(x, y)
        witness = g_min(graph, d, budget=args.budget).witness
    if args.format == "json":
        _emit(graph_to_json(graph, witness), args.out)
    else:
        _emit(graph_to_dot(graph, witness), args.out)
    return 0


def cmd_bench(args) -> int:
    """Time each computation stage over the selected intervals."""
    W = build_system(args.group)
    K = KLContext(W)
    pairs = select_pairs(W, args.max_ldiff, args.sample, args.seed)
    stages = dict.fromkeys(("kl", "graph", "dimV", "g"), 0.0)
    for ix, iy in pairs:
        x, y = W.elements[ix], W.elements[iy]
        t0 = time.perf_counter()
        d = K.d_coefficient(x, y)
        K.q_coefficient(x, y)
        t1 = time.perf_counter()
        graph = build_interval_graph(W, x, y)
        graph.diamonds
        t2 = time.perf_counter()
        dim_V(W, x, y, graph)
        t3 = time.perf_counter()
        g_min(graph, d, budget=args.budget)
        t4 = time.perf_counter()
        for key, dt in zip(stages, (t1 - t0, t2 - t1, t3 - t2, t4 - t3)):
            stages[key] += dt
    result = {"group": str(W.spec), "intervals": len(pairs)}
    result.update({f"{k}_seconds": round(v, 3) for k, v in stages.items()})
    _emit(json.dumps(result, indent=2) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kldiamond",
        description="Kazhdan-Lusztig coefficients and diamond generating sets in ADE Weyl groups.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default_format):
        p.add_argument("--group", required=True, help='Coxeter type, e.g. "A3", "D4", "E6"')
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="maximum subsets examined when searching for g")
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", help="output path (default: stdout)")

    def interval_args(p):
        p.add_argument("--x", required=True, help='1-based generator word, e.g. "2" or "e"')
        p.add_argument("--y", required=True, help='1-based generator word, e.g. "2 1 3 2"')

    def selection_args(p):
        p.add_argument("--max-ldiff", type=int, default=None)
        p.add_argument("--sample", type=int, default=None, help="number of sampled pairs")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("compute", help="full report for one interval")
    common(p, ["json", "csv", "dot"], "json")
    interval_args(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="sweep all (or sampled) intervals of a group")
    common(p, ["csv", "json"], "csv")
    selection_args(p)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--figures", help="directory for summary figures (PNG)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="moment graph of an interval as DOT (or JSON)")
    common(p, ["dot", "json"], "dot")
    interval_args(p)
    p.add_argument("--witness", action="store_true", help="colour a minimum generating set")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("bench", help="time the computation stages")
    common(p, ["json"], "json")
    selection_args(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ConfigurationError, EmptyIntervalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
