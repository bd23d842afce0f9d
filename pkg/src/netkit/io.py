"""GML and edge-list readers and writers."""

import bisect
import logging
import re
from collections import Counter
from enum import Enum

import numpy as np
import pandas as pd

from .exceptions import GraphError, ParseError
from .graph import Graph
from .validation import check_graph

log = logging.getLogger(__name__)


class GraphFileFormat(Enum):
    GML = "gml"
    EDGE_LIST = "edgelist"


# --- GML -------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<open>\[)
  | (?P<close>\])
  | (?P<string>"[^"]*")
  | (?P<num>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?(?![A-Za-z_]))
  | (?P<key>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<bad>.)
""", re.VERBOSE)


class _Tokens:
    def __init__(self, text):
        self.text = text
        self._lines = None
        self._it = (t for t in _TOKEN.finditer(text)
                    if t.lastgroup not in ("ws", "comment"))
        self._peek = None

    def where(self, pos):
        if self._lines is None:
            self._lines = [m.end() for m in re.finditer(r"\n", self.text)]
        line = bisect.bisect_right(self._lines, pos)
        start = self._lines[line - 1] if line else 0
        return line + 1, pos - start + 1

    def error(self, msg, pos):
        line, col = self.where(pos)
        return ParseError(msg, line, col)

    def next(self):
        if self._peek is not None:
            t, self._peek = self._peek, None
        else:
            t = next(self._it, None)
        if t is not None and t.lastgroup == "bad":
            raise self.error(f"unexpected character {t.group()!r}", t.start())
        return t


def _parse_list(tok, closing):
    """Key/value pairs up to the matching ``]`` (or end of input)."""
    items = []
    while True:
        t = tok.next()
        if t is None:
            if closing is not None:
                raise tok.error("unterminated '[' block", closing)
            return items
        kind = t.lastgroup
        if kind == "close":
            if closing is None:
                raise tok.error("unmatched ']'", t.start())
            return items
        if kind != "key":
            raise tok.error(f"expected a key, found {t.group()!r}", t.start())
        v = tok.next()
        if v is None:
            raise tok.error(f"key {t.group()!r} has no value", t.start())
        vk = v.lastgroup
        if vk == "open":
            value = _parse_list(tok, v.start())
        elif vk == "num":
            s = v.group()
            value = int(s) if re.fullmatch(r"[+-]?\d+", s) else float(s)
        elif vk == "string":
            value = v.group()[1:-1]
        else:
            raise tok.error(f"expected a value for {t.group()!r}, found {v.group()!r}",
                            v.start())
        items.append((t.group(), value, t.start()))


def parse_gml(text, duplicates="reject", return_info=False):
    """Graph from a GML document.

    Reads ``graph``, ``directed``, ``node.id``, ``edge.source``,
    ``edge.target`` and ``edge.weight``; other keys are skipped and counted
    in ``info["skipped_keys"]``. Node ids need not be consecutive: nodes are
    renumbered ``0 .. n-1`` in order of appearance.
    """
    tok = _Tokens(text)
    top = _parse_list(tok, None)
    graphs = [(v, pos) for k, v, pos in top if k == "graph"]
    if not graphs:
        raise ParseError("no 'graph [...]' block found")
    body, gpos = graphs[0]
    if not isinstance(body, list):
        raise tok.error("'graph' must be a block", gpos)
    skipped = Counter(k for k, _, _ in top if k != "graph")
    directed = False
    ids = {}
    src, dst, wts = [], [], []
    edge_pos = []
    for key, value, pos in body:
        if key == "directed":
            if value not in (0, 1):
                raise tok.error(f"'directed' must be 0 or 1, got {value!r}", pos)
            directed = bool(value)
        elif key == "node":
            if not isinstance(value, list):
                raise tok.error("'node' must be a block", pos)
            nid = None
            for k, v, p in value:
                if k == "id":
                    if not isinstance(v, int):
                        raise tok.error(f"node id must be an integer, got {v!r}", p)
                    nid = v
                else:
                    skipped["node." + k] += 1
            if nid is None:
                raise tok.error("node record without 'id'", pos)
            if nid in ids:
                raise tok.error(f"duplicate node id {nid}", pos)
            ids[nid] = len(ids)
        elif key == "edge":
            if not isinstance(value, list):
                raise tok.error("'edge' must be a block", pos)
            rec = {}
            for k, v, p in value:
                if k in ("source", "target"):
                    if not isinstance(v, int):
                        raise tok.error(f"edge {k} must be an integer, got {v!r}", p)
                    rec[k] = v
                elif k == "weight":
                    if isinstance(v, (list, str)):
                        raise tok.error(f"edge weight must be a number, got {v!r}", p)
                    rec[k] = float(v)
                else:
                    skipped["edge." + k] += 1
            if "source" not in rec or "target" not in rec:
                raise tok.error("edge record needs 'source' and 'target'", pos)
            src.append(rec["source"])
            dst.append(rec["target"])
            wts.append(rec.get("weight"))
            edge_pos.append(pos)
        else:
            skipped[key] += 1
    # endpoints are resolved after all nodes are known: GML allows edges
    # before the nodes they reference
    s = np.empty(len(src), dtype=np.int64)
    d = np.empty(len(dst), dtype=np.int64)
    for i, (a, b) in enumerate(zip(src, dst)):
        for which, x, out in (("source", a, s), ("target", b, d)):
            j = ids.get(x)
            if j is None:
                raise tok.error(f"edge {which} references undeclared node id {x}", edge_pos[i])
            out[i] = j
    weighted = any(w is not None for w in wts)
    w = np.array([1.0 if x is None else x for x in wts]) if weighted else None
    loops = bool(np.any(s == d))
    try:
        g = Graph.from_arrays(len(ids), s, d, weights=w, directed=directed,
                              duplicates=duplicates, allow_self_loops=loops)
    except GraphError as exc:
        raise ParseError(f"invalid GML graph: {exc}") from exc
    if skipped:
        log.info("GML: skipped %d unsupported keys", sum(skipped.values()))
    if return_info:
        return g, {"skipped_keys": dict(skipped), "ids": list(ids)}
    return g


def read_gml(path, duplicates="reject", return_info=False):
    with open(path, encoding="utf-8") as f:
        text = f.read()
    return parse_gml(text, duplicates=duplicates, return_info=return_info)


def format_gml(g):
    check_graph(g)
    out = ["graph [", f"  directed {int(g.directed)}"]
    out.extend(f"  node [\n    id {v}\n  ]" for v in range(g.n))
    src, dst, w = g.edges()
    if w is None:
        out.extend(f"  edge [\n    source {a}\n    target {b}\n  ]"
                   for a, b in zip(src.tolist(), dst.tolist()))
    else:
        out.extend(f"  edge [\n    source {a}\n    target {b}\n    weight {x:.17g}\n  ]"
                   for a, b, x in zip(src.tolist(), dst.tolist(), w.tolist()))
    out.append("]")
    return "\n".join(out) + "\n"


def write_gml(g, path):
    """Write ``g`` as GML. Nodes are written as ids ``0 .. n-1``, weights
    with 17 significant digits so that they read back exactly."""
    text = format_gml(g)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


# --- edge lists ------------------------------------------------------------


def _scan_edge_list(path, separator, comment_prefix):
    """Line-by-line parse used to pinpoint errors the fast path rejects."""
    rows = []
    width = None
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            s = line.strip()
            if not s or (comment_prefix and s.startswith(comment_prefix)):
                continue
            parts = s.split(separator)
            if len(parts) not in (2, 3):
                raise ParseError(f"expected 2 or 3 tokens, found {len(parts)}", lineno)
            if width is None:
                width = len(parts)
            elif len(parts) != width:
                raise ParseError(f"expected {width} tokens like the first edge line, "
                                 f"found {len(parts)}", lineno)
            row = []
            col = line.find(parts[0]) + 1
            for i, p in enumerate(parts):
                try:
                    row.append(int(p) if i < 2 else float(p))
                except ValueError:
                    kind = "integer node id" if i < 2 else "number"
                    raise ParseError(f"expected {kind}, found {p!r}", lineno,
                                     line.find(p, col - 1) + 1) from None
            rows.append(row)
    if width is None:
        return np.zeros((0, 2))
    return np.array(rows, dtype=np.float64)


def _fast_edge_list(path, separator, comment_prefix):
    if comment_prefix is not None and len(comment_prefix) != 1:
        return None
    try:
        df = pd.read_csv(path, sep=r"\s+" if separator is None else separator,
                         comment=comment_prefix, header=None, engine="c",
                         skip_blank_lines=True)
    except pd.errors.EmptyDataError:
        return np.zeros((0, 2))
    except (pd.errors.ParserError, ValueError):
        return None
    if df.shape[1] not in (2, 3) or df.isna().any().any():
        return None
    if not all(pd.api.types.is_integer_dtype(df[c]) for c in df.columns[:2]):
        return None
    if df.shape[1] == 3 and not pd.api.types.is_numeric_dtype(df[2]):
        return None
    return df


def read_edge_list(path, separator=None, comment_prefix="#", one_indexed=False,
                   directed=False, duplicates="reject", allow_self_loops=False):
    """Graph from a text file with one ``u v`` or ``u v w`` line per edge.

    ``separator=None`` splits on any whitespace. Lines starting with
    ``comment_prefix`` and blank lines are ignored. ``n`` is the largest
    endpoint plus one (after shifting one-indexed ids down).
    """
    df = _fast_edge_list(path, separator, comment_prefix)
    if df is None:
        arr = _scan_edge_list(path, separator, comment_prefix)
        u = arr[:, 0].astype(np.int64)
        v = arr[:, 1].astype(np.int64)
        w = arr[:, 2] if arr.shape[1] == 3 else None
    elif isinstance(df, np.ndarray):
        u = v = np.zeros(0, dtype=np.int64)
        w = None
    else:
        u = df[0].to_numpy(np.int64)
        v = df[1].to_numpy(np.int64)
        w = df[2].to_numpy(np.float64) if df.shape[1] == 3 else None
    if one_indexed:
        u = u - 1
        v = v - 1
    if u.size and min(u.min(), v.min()) < 0:
        raise ParseError("negative node id" + (" (node id 0 in a one-indexed file?)"
                                               if one_indexed else ""))
    n = int(max(u.max(), v.max())) + 1 if u.size else 0
    return Graph.from_arrays(n, u, v, weights=w, directed=directed, duplicates=duplicates,
                             allow_self_loops=allow_self_loops)


def write_edge_list(g, path, separator=" ", one_indexed=False):
    check_graph(g)
    src, dst, w = g.edges()
    shift = 1 if one_indexed else 0
    cols = {0: src + shift, 1: dst + shift}
    if w is not None:
        cols[2] = w
    pd.DataFrame(cols).to_csv(path, sep=separator, header=False, index=False,
                              float_format="%.17g")


def read_graph(path, fmt=None, **kwargs):
    """Read by format name (``"gml"`` / ``"edgelist"``) or file extension."""
    if fmt is None:
        fmt = "gml" if str(path).lower().endswith(".gml") else "edgelist"
    fmt = GraphFileFormat(fmt)
    if fmt is GraphFileFormat.GML:
        return read_gml(path, **kwargs)
    return read_edge_list(path, **kwargs)


def write_graph(g, path, fmt=None):
    if fmt is None:
        fmt = "gml" if str(path).lower().endswith(".gml") else "edgelist"
    if GraphFileFormat(fmt) is GraphFileFormat.GML:
        write_gml(g, path)
    else:
        write_edge_list(g, path)
