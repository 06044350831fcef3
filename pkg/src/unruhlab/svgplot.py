"""Self-contained SVG line plots for sweep output (no plotting dependency).

One polyline per (channel, state, r) series, drawn from the oracle
concurrence column. Output is deterministic: fixed palette, fixed float
formatting, series sorted by key.
"""

from __future__ import annotations

from typing import Sequence

from .errors import BadPlotRequestError

WIDTH, HEIGHT = 720, 480
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 64, 168, 28, 48
PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22",
)
_NUMERIC_PARAMS = ("mu", "p", "r")


def _series_key(row, x_param: str, series_params: Sequence[str]) -> tuple:
    parts = []
    for name in series_params:
        v = getattr(row, name)
        parts.append(f"{name}={v:.6g}" if isinstance(v, float) else f"{name}={v}")
    return tuple(parts)


def emit_svg_lineplot(rows, x_param: str, series_params: Sequence[str], path) -> None:
    """Render concurrence against one scanned parameter.

    Every numeric parameter other than x_param must either be constant or
    be listed in series_params; anything else means the rows mix scans.
    """
    if x_param not in _NUMERIC_PARAMS:
        raise BadPlotRequestError(f"x_param must be one of {_NUMERIC_PARAMS}, got {x_param!r}")
    for name in _NUMERIC_PARAMS:
        if name == x_param or name in series_params:
            continue
        if len({getattr(r, name) for r in rows}) > 1:
            raise BadPlotRequestError(f"parameter {name!r} varies but is neither the x axis nor a series key")

    series: dict = {}
    for row in rows:
        series.setdefault(_series_key(row, x_param, series_params), []).append(
            (getattr(row, x_param), row.c_oracle)
        )

    if rows:
        xs = [getattr(r, x_param) for r in rows]
        x_lo, x_hi = min(xs), max(xs)
    else:
        x_lo, x_hi = 0.0, 1.0
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    y_lo, y_hi = 0.0, 1.0

    plot_w = WIDTH - MARGIN_L - MARGIN_R
    plot_h = HEIGHT - MARGIN_T - MARGIN_B

    def sx(x: float) -> float:
        return MARGIN_L + plot_w * (x - x_lo) / (x_hi - x_lo)

    def sy(y: float) -> float:
        return MARGIN_T + plot_h * (1.0 - (y - y_lo) / (y_hi - y_lo))

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
    ]
    axis = (
        f'<line x1="{MARGIN_L}" y1="{MARGIN_T}" x2="{MARGIN_L}" '
        f'y2="{MARGIN_T + plot_h}" stroke="#000000" stroke-width="1"/>'
        f'<line x1="{MARGIN_L}" y1="{MARGIN_T + plot_h}" x2="{MARGIN_L + plot_w}" '
        f'y2="{MARGIN_T + plot_h}" stroke="#000000" stroke-width="1"/>'
    )
    parts.append(axis)
    for i in range(5):
        fx = x_lo + (x_hi - x_lo) * i / 4
        fy = y_lo + (y_hi - y_lo) * i / 4
        parts.append(
            f'<text x="{sx(fx):.2f}" y="{MARGIN_T + plot_h + 18}" font-size="11" '
            f'font-family="monospace" text-anchor="middle">{fx:.3g}</text>'
        )
        parts.append(
            f'<text x="{MARGIN_L - 8}" y="{sy(fy) + 4:.2f}" font-size="11" '
            f'font-family="monospace" text-anchor="end">{fy:.3g}</text>'
        )
    parts.append(
        f'<text x="{MARGIN_L + plot_w / 2:.2f}" y="{HEIGHT - 10}" font-size="13" '
        f'font-family="monospace" text-anchor="middle">{x_param}</text>'
    )
    parts.append(
        f'<text x="16" y="{MARGIN_T + plot_h / 2:.2f}" font-size="13" font-family="monospace" '
        f'text-anchor="middle" transform="rotate(-90 16 {MARGIN_T + plot_h / 2:.2f})">concurrence</text>'
    )

    legend_x = MARGIN_L + plot_w + 12
    for idx, key in enumerate(sorted(series)):
        color = PALETTE[idx % len(PALETTE)]
        pts = sorted(series[key])
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        label = " ".join(key)
        ly = MARGIN_T + 14 + 14 * idx
        parts.append(
            f'<line x1="{legend_x}" y1="{ly - 4}" x2="{legend_x + 18}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="2"/>'
            f'<text x="{legend_x + 24}" y="{ly}" font-size="10" font-family="monospace">{label}</text>'
        )
    parts.append("</svg>")
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(parts) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write SVG to {path}: {exc}") from exc
