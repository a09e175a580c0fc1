"""
CSV and minimal SVG emission for overlay plots.

A dataset is an ordered mapping of column name to 1-D array; the first
column is the abscissa. Optional point markers are (x, y) pairs drawn on
top, e.g. the lattice crossings of integral-valued curves.
"""

import csv
import io
import math

import numpy as np

__all__ = ["emit_plot_csv", "render_svg", "lattice_crossings"]

_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"]


def _validate(dataset):
    if not dataset:
        raise ValueError("dataset has no columns")
    columns = {k: np.asarray(v, dtype=float) for k, v in dataset.items()}
    lengths = {v.size for v in columns.values()}
    if len(lengths) != 1:
        raise ValueError("all dataset columns must have the same length")
    if lengths.pop() == 0:
        raise ValueError("dataset is empty")
    return columns


def emit_plot_csv(dataset, path=None):
    """
    Write ``dataset`` as CSV (header row, one row per abscissa value).

    Returns the CSV text; writes it to ``path`` when given.
    """
    columns = _validate(dataset)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(columns))
    for row in zip(*columns.values()):
        writer.writerow([repr(float(x) + 0.0) for x in row])
    text = buf.getvalue()
    if path is not None:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text


def lattice_crossings(x, y, tol=1e-9):
    """Points where x is an integer and y is within ``tol`` of an integer."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    on = (np.abs(x - np.round(x)) <= tol) & (np.abs(y - np.round(y)) <= tol)
    return [(float(np.round(a)) + 0.0, float(np.round(b)) + 0.0) for a, b in zip(x[on], y[on])]


def render_svg(dataset, path=None, markers=(), width=640, height=400, title=None):
    """
    Line plot of every non-abscissa column with integer gridlines.

    Gridlines are drawn at integer coordinates when there are at most 60 of
    them along an axis.
    """
    columns = _validate(dataset)
    names = list(columns)
    x = columns[names[0]]
    ys = [columns[n] for n in names[1:]]
    all_y = np.concatenate(ys + [np.array([m[1] for m in markers], dtype=float)]) \
        if ys else np.zeros(1)
    x_lo, x_hi = float(x.min()), float(x.max())
    y_lo, y_hi = float(np.min(all_y)), float(np.max(all_y))
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1, x_hi + 1
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1, y_hi + 1
    pad = 40

    def px(v):
        return pad + (v - x_lo) / (x_hi - x_lo) * (width - 2 * pad)

    def py(v):
        return height - pad - (v - y_lo) / (y_hi - y_lo) * (height - 2 * pad)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           f'<rect width="{width}" height="{height}" fill="white"/>']
    if title:
        out.append(f'<text x="{width / 2:.1f}" y="20" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="14">{title}</text>')
    if math.floor(x_hi) - math.ceil(x_lo) <= 60:
        for g in range(math.ceil(x_lo), math.floor(x_hi) + 1):
            out.append(f'<line x1="{px(g):.2f}" y1="{pad}" x2="{px(g):.2f}" '
                       f'y2="{height - pad}" stroke="#ddd" stroke-width="1"/>')
    if math.floor(y_hi) - math.ceil(y_lo) <= 60:
        for g in range(math.ceil(y_lo), math.floor(y_hi) + 1):
            out.append(f'<line x1="{pad}" y1="{py(g):.2f}" x2="{width - pad}" '
                       f'y2="{py(g):.2f}" stroke="#ddd" stroke-width="1"/>')
    for i, (name, y) in enumerate(zip(names[1:], ys)):
        pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(x, y))
        color = _COLORS[i % len(_COLORS)]
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                   f'points="{pts}"><title>{name}</title></polyline>')
    for a, b in markers:
        out.append(f'<circle cx="{px(a):.2f}" cy="{py(b):.2f}" r="3" fill="black"/>')
    out.append("</svg>")
    text = "\n".join(out) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text
