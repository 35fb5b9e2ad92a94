"""Deterministic text renderings: CSV, JSON, SVG, ASCII.

Byte-reproducibility is a contract here, not a nicety.  CSV floats use
Python repr (shortest round-trip, 17 significant digits when needed); JSON
is emitted with sorted keys; SVG is hand-assembled markup with fixed
3-decimal pixel coordinates; nothing consults locale, time, or RNG.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Sequence

import numpy as np

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def fmt_value(v) -> str:
    """Canonical cell formatting: repr for floats, plain digits for ints."""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt_value(v) for v in row))
    return "\n".join(lines) + "\n"


def json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _px(v: float) -> str:
    return f"{v:.3f}"


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def svg_line_plot(
    x: np.ndarray,
    series: Sequence[tuple[str, np.ndarray]],
    title: str,
    x_label: str,
    y_label: str,
    width: int = 720,
    height: int = 480,
) -> str:
    """Overlayed line plot; axis ranges derived from the data only."""
    ml, mr, mt, mb = 72.0, 24.0, 44.0, 56.0
    pw, ph = width - ml - mr, height - mt - mb
    x_lo, x_hi = float(np.min(x)), float(np.max(x))
    y_hi = max(float(np.max(ys)) for _, ys in series)
    y_lo = min(0.0, min(float(np.min(ys)) for _, ys in series))
    if y_hi <= y_lo:
        y_hi = y_lo + 1.0
    y_hi *= 1.05

    def sx(v: float) -> float:
        return ml + (v - x_lo) / (x_hi - x_lo) * pw if x_hi > x_lo else ml

    def sy(v: float) -> float:
        return mt + ph - (v - y_lo) / (y_hi - y_lo) * ph

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<text x="{_px(width / 2)}" y="24" text-anchor="middle" '
        f'font-family="monospace" font-size="15">{title}</text>',
    ]
    for tv in _ticks(x_lo, x_hi):
        px = sx(tv)
        parts.append(
            f'<line x1="{_px(px)}" y1="{_px(mt)}" x2="{_px(px)}" y2="{_px(mt + ph)}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_px(px)}" y="{_px(mt + ph + 18)}" text-anchor="middle" '
            f'font-family="monospace" font-size="11">{tv:.6g}</text>'
        )
    for tv in _ticks(y_lo, y_hi):
        py = sy(tv)
        parts.append(
            f'<line x1="{_px(ml)}" y1="{_px(py)}" x2="{_px(ml + pw)}" y2="{_px(py)}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_px(ml - 6)}" y="{_px(py + 4)}" text-anchor="end" '
            f'font-family="monospace" font-size="11">{tv:.6g}</text>'
        )
    parts.append(
        f'<rect x="{_px(ml)}" y="{_px(mt)}" width="{_px(pw)}" height="{_px(ph)}" '
        f'fill="none" stroke="#000000" stroke-width="1"/>'
    )
    for i, (label, ys) in enumerate(series):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(f"{_px(sx(float(a)))},{_px(sy(float(b)))}" for a, b in zip(x, ys))
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        ly = mt + 16 + 16 * i
        parts.append(
            f'<line x1="{_px(ml + pw - 150)}" y1="{_px(ly - 4)}" x2="{_px(ml + pw - 126)}" '
            f'y2="{_px(ly - 4)}" stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{_px(ml + pw - 120)}" y="{_px(ly)}" font-family="monospace" '
            f'font-size="12">{label}</text>'
        )
    parts.append(
        f'<text x="{_px(ml + pw / 2)}" y="{_px(height - 16)}" text-anchor="middle" '
        f'font-family="monospace" font-size="13">{x_label}</text>'
    )
    parts.append(
        f'<text x="18" y="{_px(mt + ph / 2)}" text-anchor="middle" font-family="monospace" '
        f'font-size="13" transform="rotate(-90 18 {_px(mt + ph / 2)})">{y_label}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def svg_heatmap(
    values: np.ndarray,
    extent: tuple[float, float, float, float],
    title: str,
    width: int = 560,
    height: int = 560,
) -> str:
    """Grayscale cell map of a 2D array (row 0 at the bottom edge)."""
    ny, nx = values.shape
    ml, mt, mb = 60.0, 44.0, 40.0
    pw, ph = width - ml - 24.0, height - mt - mb
    vmax = float(np.max(values))
    if vmax <= 0:
        vmax = 1.0
    x0, x1, y0, y1 = extent
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<text x="{_px(width / 2)}" y="24" text-anchor="middle" '
        f'font-family="monospace" font-size="15">{title}</text>',
    ]
    cw, ch = pw / nx, ph / ny
    for iy in range(ny):
        for ix in range(nx):
            shade = 255 - int(round(255.0 * float(values[iy, ix]) / vmax))
            shade = min(255, max(0, shade))
            if shade == 255:
                continue  # white on white; skipping keeps files small
            color = f"#{shade:02x}{shade:02x}{shade:02x}"
            parts.append(
                f'<rect x="{_px(ml + ix * cw)}" y="{_px(mt + (ny - 1 - iy) * ch)}" '
                f'width="{_px(cw + 0.05)}" height="{_px(ch + 0.05)}" fill="{color}"/>'
            )
    parts.append(
        f'<rect x="{_px(ml)}" y="{_px(mt)}" width="{_px(pw)}" height="{_px(ph)}" '
        f'fill="none" stroke="#000000" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{_px(ml)}" y="{_px(mt + ph + 16)}" font-family="monospace" '
        f'font-size="11" text-anchor="middle">{x0:.6g}</text>'
    )
    parts.append(
        f'<text x="{_px(ml + pw)}" y="{_px(mt + ph + 16)}" font-family="monospace" '
        f'font-size="11" text-anchor="middle">{x1:.6g}</text>'
    )
    parts.append(
        f'<text x="{_px(ml - 8)}" y="{_px(mt + ph)}" font-family="monospace" '
        f'font-size="11" text-anchor="end">{y0:.6g}</text>'
    )
    parts.append(
        f'<text x="{_px(ml - 8)}" y="{_px(mt + 10)}" font-family="monospace" '
        f'font-size="11" text-anchor="end">{y1:.6g}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def ascii_chart(
    x: np.ndarray, y: np.ndarray, title: str, width: int = 64, height: int = 18
) -> str:
    """Monospace line chart; crude but diff-stable."""
    y_hi = float(np.max(y))
    if y_hi <= 0:
        y_hi = 1.0
    grid = [[" "] * width for _ in range(height)]
    n = len(x)
    for j in range(width):
        i = j * (n - 1) // (width - 1) if width > 1 else 0
        level = float(y[i]) / y_hi
        row = height - 1 - int(round(level * (height - 1)))
        row = min(height - 1, max(0, row))
        grid[row][j] = "*"
        for r in range(row + 1, height):
            if grid[r][j] == " ":
                grid[r][j] = "."
    lines = [title]
    lines.append(f"max = {repr(y_hi)}")
    lines.extend("|" + "".join(row) + "|" for row in grid)
    lines.append("+" + "-" * width + "+")
    lines.append(f"x: {repr(float(np.min(x)))} .. {repr(float(np.max(x)))}")
    return "\n".join(lines) + "\n"
