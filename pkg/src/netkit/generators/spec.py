"""Textual generator specs such as ``"rmat:scale=16,edge_factor=8,seed=1"``."""

import numpy as np

from .classic import (gen_barabasi_albert, gen_chung_lu, gen_erdos_renyi, gen_havel_hakimi,
                      gen_planted_partition, gen_rmat)
from .hyperbolic import HyperbolicParams, gen_hyperbolic, radius_for_degree


def _power_law_weights(n, exponent, mean_degree, seed):
    rng = np.random.default_rng(seed)
    w = rng.pareto(exponent - 1.0, n) + 1.0
    return w * (mean_degree / w.mean())


def _hyperbolic(n, R=None, alpha=1.0, avg_degree=None, seed=None):
    if R is None:
        R = radius_for_degree(n, 10.0 if avg_degree is None else avg_degree, alpha)
    return gen_hyperbolic(HyperbolicParams(n, R, alpha, seed))


def _chung_lu(n, exponent=2.5, mean_degree=10.0, seed=None):
    return gen_chung_lu(_power_law_weights(n, exponent, mean_degree, seed), seed=seed)


def _havel_hakimi(degrees):
    return gen_havel_hakimi([int(x) for x in str(degrees).split("/")])


MODELS = {
    "er": lambda n, p, seed=None: gen_erdos_renyi(n, p, seed),
    "planted": lambda k, block_size, p_in, p_out, seed=None:
        gen_planted_partition(k, block_size, p_in, p_out, seed)[0],
    "ba": lambda n, k, seed=None: gen_barabasi_albert(n, k, seed),
    "rmat": lambda scale, edge_factor, a=0.57, b=0.19, c=0.19, d=0.05, seed=None:
        gen_rmat(scale, edge_factor, a, b, c, d, seed),
    "chunglu": _chung_lu,
    "havel-hakimi": _havel_hakimi,
    "hyperbolic": _hyperbolic,
}


def _value(s):
    for cast in (int, float):
        try:
            return cast(s)
        except ValueError:
            pass
    return s


def parse_spec(spec):
    """``"model:k=v,k=v"`` -> ``(model, params)`` with numeric values cast."""
    model, _, rest = spec.partition(":")
    model = model.strip().lower()
    if model not in MODELS:
        raise ValueError(f"unknown generator {model!r}; choose from {', '.join(MODELS)}")
    params = {}
    for item in filter(None, (x.strip() for x in rest.split(","))):
        key, eq, val = item.partition("=")
        if not eq:
            raise ValueError(f"malformed generator parameter {item!r} (expected key=value)")
        params[key.strip()] = _value(val.strip())
    return model, params


def generate(model, **params):
    if model not in MODELS:
        raise ValueError(f"unknown generator {model!r}; choose from {', '.join(MODELS)}")
    try:
        return MODELS[model](**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {model}: {exc}") from exc


def from_spec(spec):
    model, params = parse_spec(spec)
    return generate(model, **params)
