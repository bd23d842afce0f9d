"""Network profile: global statistics, per-measure distributions, rank
correlations and partition summaries for one graph."""

import json
import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .. import centrality as C
from ..community import PLMConfig, modularity, plm
from ..decomposition import connected_components, core_decomposition_park
from ..distance import diameter_ifub
from ..exceptions import UndefinedMeasureError
from ..graph import ScoreVector
from ..validation import check_graph, check_random_state
from .stats import DistributionSummary, spearman_matrix

DEFAULT_MEASURES = ("degree", "betweenness", "closeness", "pagerank", "clustering",
                    "coreness")
MEASURES = DEFAULT_MEASURES + ("eigenvector", "katz")
DETAIL_MEASURES = {
    "minimal": ("degree", "pagerank", "coreness"),
    "default": DEFAULT_MEASURES,
    "full": MEASURES,
}
PARTITIONS = ("components", "communities", "shells")


@dataclass(frozen=True)
class ProfileConfig:
    """What to compute.

    ``measures=None`` takes the list for ``detail``. Betweenness and
    closeness switch to their sampled variants when ``m > approx_threshold``
    (``detail="full"`` keeps them exact).
    """

    measures: tuple = None
    detail: str = "default"
    seed: int = 0
    threads: int = None
    approx_threshold: int = 100_000
    samples: int = 64
    max_diameter_bfs: int = 500
    scatter_limit: int = 10_000
    partitions: tuple = PARTITIONS

    def __post_init__(self):
        if self.detail not in DETAIL_MEASURES:
            raise ValueError(f"detail must be one of {sorted(DETAIL_MEASURES)}")
        for m in self.resolved_measures():
            if m not in MEASURES:
                raise ValueError(f"unknown measure {m!r}; choose from {', '.join(MEASURES)}")
        for p in self.partitions:
            if p not in PARTITIONS:
                raise ValueError(f"unknown partition {p!r}")

    def resolved_measures(self):
        ms = DETAIL_MEASURES[self.detail] if self.measures is None else self.measures
        out = []
        for m in ms:
            if m not in out:
                out.append(m)
        return tuple(out)


def _clean(x):
    """JSON-native copy: nan/inf become None, numpy scalars become Python."""
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, np.ndarray):
        return _clean(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else None
    return x


@dataclass
class ProfileReport:
    """All sections hold JSON-native values, so ``from_dict(to_dict())`` is
    lossless. Sections that failed carry ``{"status": "failed", "error": ...}``.
    """

    graph: dict
    diameter: dict
    measures: dict
    correlation: dict
    partitions: dict
    scatter: dict
    meta: dict = field(default_factory=dict)

    def to_dict(self):
        return _clean(asdict(self))

    @classmethod
    def from_dict(cls, d):
        return cls(**d)

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent, allow_nan=False)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def failed_sections(self):
        out = []
        if self.diameter.get("status") == "failed":
            out.append("diameter")
        for k, v in self.measures.items():
            if v.get("status") == "failed":
                out.append(f"measures.{k}")
            else:
                for sub in ("centralization", "assortativity"):
                    if isinstance(v.get(sub), dict) and v[sub].get("status") == "failed":
                        out.append(f"measures.{k}.{sub}")
        for k, v in self.partitions.items():
            if v.get("status") == "failed":
                out.append(f"partitions.{k}")
        if self.correlation.get("status") == "failed":
            out.append("correlation")
        return out


def _failed(exc):
    return {"status": "failed", "error": f"{type(exc).__name__}: {exc}"}


def _index(fn):
    """Network index section; a mathematically undefined value is reported
    as such, not as a failure."""
    try:
        value = fn()
    except UndefinedMeasureError as exc:
        return {"status": "undefined", "value": None, "reason": str(exc)}
    except Exception as exc:
        return _failed(exc)
    return {"status": "ok", "value": value}


def _compute_measure(name, g, cfg, approx, seed):
    threads = cfg.threads
    params = C.ApproxParams(s=cfg.samples, seed=seed)
    if name == "degree":
        return C.degree_centrality(g), "exact"
    if name == "betweenness":
        if approx:
            res = C.betweenness_sampled(g, params, normalized=True, threads=threads)
            return ScoreVector(res.values, "betweenness", True), f"sampled(s={cfg.samples})"
        res = C.betweenness_exact(g, normalized=True, threads=threads)
        return ScoreVector(res.values, "betweenness", True), "exact"
    if name == "closeness":
        if approx:
            return C.closeness_sampled(g, params, threads=threads), f"sampled(s={cfg.samples})"
        return C.closeness_exact(g, threads=threads), "exact"
    if name == "pagerank":
        return C.pagerank(g, threads=threads), "exact"
    if name == "clustering":
        return C.local_clustering_coefficient(g, threads=threads), "exact"
    if name == "coreness":
        core = core_decomposition_park(g, threads=threads).core_number
        return ScoreVector(core.astype(np.float64), "coreness"), "exact"
    if name == "eigenvector":
        return C.eigenvector_centrality(g, threads=threads), "exact"
    if name == "katz":
        _, hi = C.spectral_radius_bounds(g, threads=threads)
        alpha = 0.5 / hi if hi > 0 else 0.1
        return C.katz_centrality(g, C.PowerIterParams(alpha=alpha), threads=threads), \
            f"exact(alpha={alpha:.6g})"
    raise ValueError(f"unknown measure {name!r}")


def _partition_section(p):
    sizes = sorted(p.size_list(), reverse=True)
    return {"status": "ok", "k": int(p.k), "sizes": sizes,
            "size_summary": DistributionSummary.from_values(sizes).to_dict()}


def build_profile(g, config=None, name="graph"):
    """Run the configured kernels on ``g`` and assemble a ProfileReport.

    A section whose kernel raises is recorded as failed; the other sections
    are still computed. The result is deterministic for a fixed
    ``config.seed``.
    """
    cfg = config or ProfileConfig()
    check_graph(g, undirected=True)
    rng = check_random_state(cfg.seed)
    timings = {}
    n, m = g.n, g.m
    density = 2.0 * m / (n * (n - 1)) if n > 1 else 0.0
    graph = {"name": name, "n": n, "m": m, "directed": g.directed, "weighted": g.weighted,
             "density": density}

    t = time.perf_counter()
    try:
        d = diameter_ifub(g, mode="exact", max_bfs=cfg.max_diameter_bfs, threads=cfg.threads)
        diameter = {"status": "ok", "lower": d.lower, "upper": d.upper, "exact": d.exact,
                    "bfs_count": d.bfs_count}
    except Exception as exc:
        diameter = _failed(exc)
    timings["diameter"] = time.perf_counter() - t

    approx = cfg.detail != "full" and m > cfg.approx_threshold
    measures = {}
    vectors = {}
    for name_m in cfg.resolved_measures():
        t = time.perf_counter()
        try:
            sv, variant = _compute_measure(name_m, g, cfg, approx, int(rng.integers(2**63)))
            vectors[name_m] = sv
            sec = {"status": "ok", "variant": variant,
                   "summary": DistributionSummary.from_values(sv.values).to_dict()}
            sec["centralization"] = _index(lambda: C.centralization(sv, g).value)
            sec["centralization"]["normalized"] = sv.measure == "degree"
            sec["assortativity"] = _index(lambda: C.assortativity(sv, g))
        except Exception as exc:
            sec = _failed(exc)
        measures[name_m] = sec
        timings[f"measure.{name_m}"] = time.perf_counter() - t

    names = list(vectors)
    if len(names) >= 2 and n >= 3:
        mat = spearman_matrix([vectors[k] for k in names])
        correlation = {"status": "ok", "names": names, "matrix": mat}
    elif len(names) >= 2:
        correlation = {"status": "failed",
                       "error": "rank correlation needs at least 3 nodes", "names": names}
    else:
        correlation = {"status": "skipped", "names": names, "matrix": []}

    partitions = {}
    for pname in cfg.partitions:
        t = time.perf_counter()
        try:
            if pname == "components":
                sec = _partition_section(connected_components(g))
            elif pname == "communities":
                p = plm(g, PLMConfig(refine=True, seed=int(rng.integers(2**63))))
                sec = _partition_section(p)
                sec["modularity"] = modularity(g, p)
            else:
                core = core_decomposition_park(g, threads=cfg.threads)
                sec = _partition_section(core.shells())
                sec["max_core"] = core.max_core
        except Exception as exc:
            sec = _failed(exc)
        partitions[pname] = sec
        timings[f"partition.{pname}"] = time.perf_counter() - t

    k = min(cfg.scatter_limit, n) if names else 0
    nodes = np.sort(rng.choice(n, size=k, replace=False)) if k else np.zeros(0, dtype=int)
    scatter = {"nodes": nodes, "values": {nm: vectors[nm].values[nodes] for nm in names}}

    meta = {"seed": cfg.seed, "detail": cfg.detail, "approximate": approx,
            "measures": list(cfg.resolved_measures()), "timings": timings}
    report = ProfileReport(graph, diameter, measures, correlation, partitions, scatter, meta)
    return ProfileReport.from_dict(report.to_dict())
