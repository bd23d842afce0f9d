"""Command-line interface: ``netkit profile | bench | generate``.

Exit codes: 0 success, 1 some section or run failed, 2 fatal error.
"""

import argparse
import logging
import os
import sys

from .exceptions import GraphError, ParseError

EXIT_OK, EXIT_PARTIAL, EXIT_FATAL = 0, 1, 2


def _list(s):
    return [x.strip() for x in s.split(",") if x.strip()]


def _load_input(path, fmt, threads=None):
    from .generators.spec import MODELS, from_spec
    from .io import read_graph

    if not os.path.exists(path) and path.partition(":")[0].lower() in MODELS:
        return os.path.basename(path), from_spec(path)
    return os.path.basename(path), read_graph(path, fmt)


def cmd_profile(args):
    from .profiling import ProfileConfig, build_profile, render_report

    name, g = _load_input(args.input, args.format)
    cfg = ProfileConfig(measures=tuple(_list(args.measures)) if args.measures is not None
                        else None, detail=args.detail, seed=args.seed, threads=args.threads)
    report = build_profile(g, cfg, name=name)
    os.makedirs(args.out, exist_ok=True)
    stem = os.path.splitext(name)[0] or "graph"
    for fmt in ("json", "html"):
        path = os.path.join(args.out, f"{stem}.profile.{fmt}")
        with open(path, "w", encoding="utf-8") as f:
            f.write(render_report(report, fmt))
        print(path)
    failed = report.failed_sections()
    for s in failed:
        print(f"section failed: {s}", file=sys.stderr)
    return EXIT_PARTIAL if failed else EXIT_OK


def cmd_bench(args):
    from .profiling import run_benchmark, write_csv

    graphs = _list(args.graphs) if args.graphs else []
    if args.generate:
        graphs.extend(args.generate)
    if not graphs:
        raise ValueError("bench needs --graphs or --generate")
    records = run_benchmark(graphs, kernels=_list(args.kernels), threads=args.threads,
                            repetitions=args.reps)
    if args.csv:
        write_csv(records, args.csv)
    else:
        write_csv(records, sys.stdout)
    bad = [r for r in records if not r.ok]
    for r in bad:
        print(f"run failed: {r.kernel} on {r.graph}: {r.error}", file=sys.stderr)
    return EXIT_PARTIAL if bad else EXIT_OK


def cmd_generate(args):
    from .generators.spec import _value, generate
    from .io import write_graph

    params = {}
    for item in args.params:
        key, eq, val = item.partition("=")
        if not eq:
            raise ValueError(f"model parameter {item!r} must look like key=value")
        params[key] = _value(val)
    if args.seed is not None and args.model != "havel-hakimi":
        params["seed"] = args.seed
    g = generate(args.model, **params)
    if args.out:
        write_graph(g, args.out, args.format)
        print(f"{args.out}: n={g.n} m={g.m}")
    else:
        from .io import format_gml

        if args.format == "gml":
            sys.stdout.write(format_gml(g))
        else:
            src, dst, _ = g.edges()
            sys.stdout.writelines(f"{a} {b}\n" for a, b in zip(src.tolist(), dst.tolist()))
    return EXIT_OK


def build_parser():
    from .profiling.bench import DEFAULT_KERNELS, KERNELS
    from .generators.spec import MODELS

    p = argparse.ArgumentParser(prog="netkit", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("profile", help="profile one graph to HTML and JSON")
    pr.add_argument("input", help="graph file, or a generator spec such as ba:n=1000,k=4")
    pr.add_argument("--format", choices=["gml", "edgelist"], default=None)
    pr.add_argument("--out", default=".", help="output directory")
    pr.add_argument("--detail", choices=["minimal", "default", "full"], default="default")
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--threads", type=int, default=None)
    pr.add_argument("--measures", default=None,
                    help="comma-separated measures (empty string for none)")
    pr.set_defaults(func=cmd_profile)

    b = sub.add_parser("bench", help="edges-per-second benchmark")
    b.add_argument("--kernels", default=",".join(DEFAULT_KERNELS),
                   help=f"comma-separated, from: {', '.join(KERNELS)}")
    b.add_argument("--graphs", default=None, help="comma-separated graph files")
    b.add_argument("--generate", action="append", default=None, metavar="SPEC",
                   help="generator spec, e.g. rmat:scale=16,edge_factor=8,seed=1")
    b.add_argument("--threads", type=int, default=None)
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--csv", default=None, help="output CSV path (default stdout)")
    b.set_defaults(func=cmd_bench)

    gnr = sub.add_parser("generate", help="generate a graph")
    gnr.add_argument("model", choices=sorted(MODELS))
    gnr.add_argument("params", nargs="*", help="model parameters as key=value")
    gnr.add_argument("--seed", type=int, default=None)
    gnr.add_argument("--out", default=None)
    gnr.add_argument("--format", choices=["gml", "edgelist"], default=None)
    gnr.set_defaults(func=cmd_generate)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (OSError, ValueError, TypeError, GraphError, ParseError) as exc:
        print(f"netkit: error: {exc}", file=sys.stderr)
        return EXIT_FATAL


if __name__ == "__main__":
    sys.exit(main())
