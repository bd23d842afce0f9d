"""JSON and self-contained HTML renderings of a ProfileReport.

Every number shown in the HTML sits in an element carrying a ``data-key``
attribute with the dotted path of the value in the JSON document, printed
with Python's shortest round-trip ``repr``. Undefined values render as
empty cells.
"""

import html

from .report import ProfileReport

_CSS = """
body { font-family: sans-serif; margin: 2em; color: #222; }
h1 { font-size: 1.5em; } h2 { font-size: 1.2em; margin-top: 1.5em; }
table { border-collapse: collapse; margin: 0.5em 0; }
td, th { border: 1px solid #bbb; padding: 2px 8px; text-align: right; }
th { background: #eee; }
.failed { color: #a00; }
.charts { display: flex; flex-wrap: wrap; gap: 1em; }
figure { margin: 0; } figcaption { font-size: 0.85em; text-align: center; }
"""


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return repr(x)


def _cell(key, value):
    return f'<td data-key="{html.escape(key)}">{html.escape(_fmt(value))}</td>'


def _row(label, key, value):
    return f"<tr><th>{html.escape(label)}</th>{_cell(key, value)}</tr>"


def _hist_svg(summary, width=260, height=120):
    counts = summary.get("counts") or []
    if not counts:
        return ""
    top = max(counts) or 1
    bw = width / len(counts)
    bars = "".join(
        f'<rect x="{i * bw:.2f}" y="{height - c / top * height:.2f}" width="{max(bw - 1, 0.5):.2f}" '
        f'height="{c / top * height:.2f}" fill="#4a7ab5"/>'
        for i, c in enumerate(counts))
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">{bars}</svg>')


def _scatter_svg(xs, ys, size=220):
    pts = [(x, y) for x, y in zip(xs, ys) if x is not None and y is not None]
    if not pts:
        return ""
    x0, x1 = min(p[0] for p in pts), max(p[0] for p in pts)
    y0, y1 = min(p[1] for p in pts), max(p[1] for p in pts)
    sx = (size - 4) / ((x1 - x0) or 1)
    sy = (size - 4) / ((y1 - y0) or 1)
    dots = "".join(
        f'<circle cx="{2 + (x - x0) * sx:.1f}" cy="{size - 2 - (y - y0) * sy:.1f}" r="1" '
        'fill="#c0504d" fill-opacity="0.4"/>' for x, y in pts)
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">{dots}</svg>')


def _summary_rows(prefix, s):
    return "".join(_row(k, f"{prefix}.{k}", s.get(k))
                   for k in ("min", "max", "mean", "median", "stddev"))


def _failed(sec):
    return f'<p class="failed">failed: {html.escape(str(sec.get("error", "")))}</p>'


def render_html(r):
    d = r.to_dict()
    out = ["<!DOCTYPE html>", '<html><head><meta charset="utf-8">',
           f"<title>Network profile: {html.escape(str(d['graph']['name']))}</title>",
           f"<style>{_CSS}</style></head><body>",
           f"<h1>Network profile: {html.escape(str(d['graph']['name']))}</h1>",
           "<h2>Global</h2><table>"]
    for k in ("n", "m", "density"):
        out.append(_row(k, f"graph.{k}", d["graph"][k]))
    out.append("</table>")
    dia = d["diameter"]
    out.append("<h3>Diameter</h3>")
    if dia.get("status") == "ok":
        out.append("<table>" + "".join(_row(k, f"diameter.{k}", dia[k])
                                        for k in ("lower", "upper", "exact", "bfs_count"))
                   + "</table>")
    else:
        out.append(_failed(dia))

    if d["measures"]:
        out.append("<h2>Measures</h2>")
    for name, sec in d["measures"].items():
        out.append(f"<h3>{html.escape(name)}</h3>")
        if sec.get("status") != "ok":
            out.append(_failed(sec))
            continue
        p = f"measures.{name}"
        out.append(f"<p>variant: {html.escape(sec['variant'])}</p>")
        out.append('<div class="charts"><table>' + _summary_rows(f"{p}.summary", sec["summary"]))
        for sub in ("centralization", "assortativity"):
            s = sec[sub]
            out.append(_row(sub, f"{p}.{sub}.value", s.get("value")))
        out.append(f"</table><figure>{_hist_svg(sec['summary'])}"
                   f"<figcaption>{html.escape(name)} histogram</figcaption></figure></div>")

    corr = d["correlation"]
    if corr.get("status") == "ok":
        names = corr["names"]
        out.append("<h2>Spearman rank correlation</h2><table><tr><th></th>")
        out.extend(f"<th>{html.escape(nm)}</th>" for nm in names)
        out.append("</tr>")
        for i, a in enumerate(names):
            out.append(f"<tr><th>{html.escape(a)}</th>")
            out.extend(_cell(f"correlation.matrix.{i}.{j}", corr["matrix"][i][j])
                       for j in range(len(names)))
            out.append("</tr>")
        out.append("</table>")
    elif corr.get("status") == "failed":
        out.append("<h2>Spearman rank correlation</h2>" + _failed(corr))

    vals = d["scatter"]["values"]
    names = list(vals)
    if len(names) >= 2:
        out.append('<h2>Scatter plots</h2><div class="charts">')
        base = names[0]
        for other in names[1:]:
            out.append(f"<figure>{_scatter_svg(vals[base], vals[other])}<figcaption>"
                       f"{html.escape(base)} vs {html.escape(other)}</figcaption></figure>")
        out.append("</div>")

    if d["partitions"]:
        out.append("<h2>Partitions</h2>")
    for name, sec in d["partitions"].items():
        out.append(f"<h3>{html.escape(name)}</h3>")
        if sec.get("status") != "ok":
            out.append(_failed(sec))
            continue
        p = f"partitions.{name}"
        out.append('<div class="charts"><table>' + _row("subsets", f"{p}.k", sec["k"]))
        for extra in ("modularity", "max_core"):
            if extra in sec:
                out.append(_row(extra, f"{p}.{extra}", sec[extra]))
        out.append(_summary_rows(f"{p}.size_summary", sec["size_summary"]))
        out.append(f"</table><figure>{_hist_svg(sec['size_summary'])}"
                   "<figcaption>subset sizes</figcaption></figure></div>")
    out.append("</body></html>")
    return "\n".join(out)


def render_report(r, format="json"):
    """Render as ``"json"`` (lossless) or ``"html"`` (self-contained)."""
    if not isinstance(r, ProfileReport):
        raise TypeError("expected a ProfileReport")
    if format == "json":
        return r.to_json(indent=2)
    if format == "html":
        return render_html(r)
    raise ValueError(f"format must be 'json' or 'html', got {format!r}")
