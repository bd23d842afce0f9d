"""Edges-per-second benchmark harness."""

import csv
import os
import statistics
import time
from dataclasses import dataclass

from .. import centrality as C
from ..community import PLMConfig, plm, plp
from ..decomposition import connected_components, core_decomposition_park, core_decomposition_seq
from ..distance import diameter_ifub
from ..generators.spec import from_spec
from ..graph import build_graph
from ..io import read_graph

CSV_COLUMNS = ("kernel", "graph", "n", "m", "threads", "seconds", "edges_per_second")

KERNELS = {
    "components": lambda g, t: connected_components(g),
    "coreness": lambda g, t: core_decomposition_park(g, threads=t),
    "coreness-seq": lambda g, t: core_decomposition_seq(g),
    "degree": lambda g, t: C.degree_centrality(g),
    "pagerank": lambda g, t: C.pagerank(g, threads=t),
    "betweenness-approx": lambda g, t: C.betweenness_sampled(
        g, C.ApproxParams(s=42, seed=1), threads=t),
    "closeness-approx": lambda g, t: C.closeness_sampled(
        g, C.ApproxParams(s=42, seed=1), threads=t),
    "clustering": lambda g, t: C.local_clustering_coefficient(g, threads=t),
    "plp": lambda g, t: plp(g, seed=1),
    "plm": lambda g, t: plm(g, PLMConfig(seed=1)),
    "diameter": lambda g, t: diameter_ifub(g, threads=t),
}
DEFAULT_KERNELS = ("components", "coreness", "pagerank", "plp")


@dataclass(frozen=True)
class BenchRecord:
    kernel: str
    graph: str
    n: int
    m: int
    threads: int
    seconds: float = None
    error: str = None

    @property
    def ok(self):
        return self.error is None

    @property
    def edges_per_second(self):
        if self.seconds is None or self.seconds <= 0:
            return None
        return self.m / self.seconds

    def csv_row(self):
        return [self.kernel, self.graph, self.n, self.m, self.threads,
                "" if self.seconds is None else repr(self.seconds),
                "" if self.edges_per_second is None else repr(self.edges_per_second)]


_WARM = build_graph([(0, 1), (1, 2), (2, 0), (2, 3)], 4)


def _load(source):
    """``(name, graph)`` from a Graph, ``(name, Graph)`` pair, path or spec."""
    from ..graph import Graph

    if isinstance(source, tuple):
        return source
    if isinstance(source, Graph):
        return "graph", source
    if os.path.exists(source):
        return os.path.basename(source), read_graph(source)
    return source, from_spec(source)


def run_benchmark(graphs, kernels=DEFAULT_KERNELS, threads=None, repetitions=3):
    """Median wall time per (kernel, graph) over ``repetitions`` runs.

    ``graphs`` are paths, generator specs, Graphs or ``(name, Graph)``
    pairs. A graph or kernel that fails yields a record with ``error`` set;
    the remaining runs continue.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    for k in kernels:
        if k not in KERNELS:
            raise ValueError(f"unknown kernel {k!r}; choose from {', '.join(KERNELS)}")
    from .._parallel import resolve_threads

    nthreads = resolve_threads(threads)
    records = []
    for source in graphs:
        try:
            name, g = _load(source)
        except Exception as exc:
            name = source if isinstance(source, str) else "graph"
            for k in kernels:
                records.append(BenchRecord(k, name, 0, 0, nthreads,
                                           error=f"{type(exc).__name__}: {exc}"))
            continue
        for k in kernels:
            fn = KERNELS[k]
            try:
                fn(_WARM, nthreads)
                times = []
                for _ in range(repetitions):
                    t = time.perf_counter()
                    fn(g, nthreads)
                    times.append(time.perf_counter() - t)
                records.append(BenchRecord(k, name, g.n, g.m, nthreads,
                                           statistics.median(times)))
            except Exception as exc:
                records.append(BenchRecord(k, name, g.n, g.m, nthreads,
                                           error=f"{type(exc).__name__}: {exc}"))
    return records


def write_csv(records, path_or_file):
    """CSV with columns ``kernel,graph,n,m,threads,seconds,edges_per_second``;
    failed runs leave the last two empty."""
    own = isinstance(path_or_file, (str, os.PathLike))
    f = open(path_or_file, "w", newline="") if own else path_or_file
    try:
        w = csv.writer(f)
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow(r.csv_row())
    finally:
        if own:
            f.close()
