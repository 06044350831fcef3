"""Parameter sweeps, figure presets, ESD boundary location, CSV output.

Every grid point is independent (pure functions all the way down), so the
engine is free to evaluate points in any order; rows are always emitted in
lexicographic (mu, p, r) grid order regardless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from .channels import ApplicationMode, ChannelKind, ChannelSpec, apply_channel
from .concurrence import (
    closed_form_concurrence,
    wootters_concurrence,
    xstate_concurrence,
)
from .errors import BadSweepSpecError, ClosedFormDomainError
from .unruh import R_MAX, unruh_transform
from .xstate import StatePreset, XStateCoeffs

ESD_THRESHOLD = 1e-12
CSV_HEADER = "mu,p,r,channel,state,c_closed,c_oracle,delta"

_PARAM_DOMAINS = {"mu": (0.0, 1.0), "p": (0.0, 1.0), "r": (0.0, R_MAX)}


def evolve_state(coeffs: XStateCoeffs, r: float, channel: ChannelSpec) -> np.ndarray:
    """Full pipeline: frame transformation, then the noisy channel."""
    return apply_channel(unruh_transform(coeffs, r), channel)


def point_concurrence(
    coeffs: XStateCoeffs,
    r: float,
    channel: ChannelSpec,
    method: str = "xform",
    magnitudes_mode: bool = True,
) -> float:
    if method == "closed":
        return closed_form_concurrence(
            channel.kind, coeffs, r, channel.p, channel.mu, magnitudes_mode
        ).value
    rho = evolve_state(coeffs, r, channel)
    if method == "wootters":
        return wootters_concurrence(rho).value
    if method == "xform":
        return xstate_concurrence(rho).value
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class GridSpec:
    start: float
    stop: float
    count: int

    def values(self) -> np.ndarray:
        if self.count < 1:
            raise BadSweepSpecError(f"grid count must be >= 1, got {self.count}")
        if self.count == 1:
            return np.array([self.start])
        return np.linspace(self.start, self.stop, self.count)

    @staticmethod
    def fixed(value: float) -> "GridSpec":
        return GridSpec(value, value, 1)


@dataclass(frozen=True)
class SweepSpec:
    channel: ChannelKind
    state: StatePreset
    mu_grid: GridSpec
    p_grid: GridSpec
    r_grid: GridSpec
    application: ApplicationMode = ApplicationMode.SINGLE_CORRELATED_USE
    # which concurrence columns to fill; both by default
    methods: tuple = ("closed", "oracle")


@dataclass(frozen=True)
class SweepRow:
    mu: float
    p: float
    r: float
    channel: str
    state: str
    c_closed: float
    c_oracle: float
    delta: float


def _check_grid(name: str, grid: GridSpec) -> None:
    lo, hi = _PARAM_DOMAINS[name]
    vals = grid.values()
    if vals.min() < lo - 1e-12 or vals.max() > hi + 1e-12:
        raise BadSweepSpecError(
            f"{name} grid [{vals.min()}, {vals.max()}] leaves domain [{lo}, {hi}]"
        )


def run_sweep(spec: SweepSpec) -> list:
    """Cartesian product of the three grids, rows in (mu, p, r) order."""
    for name, grid in (("mu", spec.mu_grid), ("p", spec.p_grid), ("r", spec.r_grid)):
        _check_grid(name, grid)
    rows = []
    coeffs = spec.state.coeffs
    for mu in spec.mu_grid.values():
        for p in spec.p_grid.values():
            channel_at = ChannelSpec(spec.channel, float(p), float(mu), spec.application)
            for r in spec.r_grid.values():
                c_closed = math.nan
                if "closed" in spec.methods:
                    try:
                        c_closed = closed_form_concurrence(
                            spec.channel, coeffs, float(r), float(p), float(mu),
                            spec.state.magnitudes_mode,
                        ).value
                    except ClosedFormDomainError:
                        c_closed = math.nan
                c_oracle = math.nan
                if "oracle" in spec.methods:
                    c_oracle = xstate_concurrence(
                        evolve_state(coeffs, float(r), channel_at)
                    ).value
                rows.append(
                    SweepRow(
                        mu=float(mu), p=float(p), r=float(r),
                        channel=spec.channel.value, state=spec.state.name,
                        c_closed=c_closed, c_oracle=c_oracle,
                        delta=abs(c_closed - c_oracle),
                    )
                )
    return rows


# figure presets: scan definitions behind the published panels; densities and
# the per-curve r set are not stated anywhere, so smooth defaults are used
# (101-point scans, 61x61 surfaces, r curves at 0, pi/8, pi/4)
_R_CURVES = GridSpec(0.0, R_MAX, 3)
_FIGURES = {
    "fig1": dict(mu=GridSpec(0.0, 1.0, 101), p=GridSpec.fixed(0.3), r=_R_CURVES, scan="mu"),
    "fig2": dict(mu=GridSpec(0.0, 1.0, 101), p=GridSpec.fixed(0.7), r=_R_CURVES, scan="mu"),
    "fig3": dict(mu=GridSpec.fixed(0.5), p=GridSpec(0.0, 1.0, 101), r=_R_CURVES, scan="p"),
    "fig4": dict(mu=GridSpec.fixed(0.3), p=GridSpec(0.0, 1.0, 61), r=GridSpec(0.0, R_MAX, 61), scan=None),
    "fig5": dict(mu=GridSpec.fixed(0.7), p=GridSpec(0.0, 1.0, 61), r=GridSpec(0.0, R_MAX, 61), scan=None),
    "fig6": dict(mu=GridSpec(0.0, 1.0, 61), p=GridSpec(0.0, 1.0, 61), r=GridSpec.fixed(R_MAX), scan=None),
}
FIGURE_NAMES = tuple(_FIGURES)
_FIGURE_CHANNELS = (ChannelKind.AMPLITUDE_DAMPING, ChannelKind.DEPOLARIZING, ChannelKind.BIT_FLIP)


def figure_scan_param(name: str) -> Optional[str]:
    """The single scanned axis for line figures, None for surfaces."""
    return _figure_def(name)["scan"]


def _figure_def(name: str) -> dict:
    try:
        return _FIGURES[name.lower()]
    except KeyError:
        raise BadSweepSpecError(
            f"unknown figure {name!r}; expected one of {', '.join(_FIGURES)}"
        ) from None


def figure_preset(
    name: str,
    application: ApplicationMode = ApplicationMode.SINGLE_CORRELATED_USE,
) -> list:
    """One SweepSpec per (channel, state preset) panel of the named figure."""
    from .xstate import PRESET_NAMES, state_preset

    fig = _figure_def(name)
    return [
        SweepSpec(
            channel=kind,
            state=state_preset(preset),
            mu_grid=fig["mu"],
            p_grid=fig["p"],
            r_grid=fig["r"],
            application=application,
        )
        for kind in _FIGURE_CHANNELS
        for preset in PRESET_NAMES
    ]


def run_figure(
    name: str,
    application: ApplicationMode = ApplicationMode.SINGLE_CORRELATED_USE,
) -> list:
    rows = []
    for spec in figure_preset(name, application):
        rows.extend(run_sweep(spec))
    return rows


@dataclass(frozen=True)
class EsdQuery:
    """Scan one parameter for the point where concurrence dies.

    fixed holds the other two of {mu, p, r}; the scan runs over
    [lo, hi] inside the scan parameter's domain.
    """

    channel: ChannelKind
    state: StatePreset
    scan: str
    fixed: Mapping[str, float]
    lo: float
    hi: float
    application: ApplicationMode = ApplicationMode.SINGLE_CORRELATED_USE

    def concurrence_at(self, x: float) -> float:
        params = dict(self.fixed)
        params[self.scan] = x
        channel = ChannelSpec(self.channel, params["p"], params["mu"], self.application)
        return point_concurrence(self.state.coeffs, params["r"], channel, "xform")


def esd_boundary(
    q: EsdQuery, tol: float = 1e-6, prescan_points: int = 200
) -> Union[float, Sequence, None]:
    """Locate the onset of zero concurrence along the scan.

    Returns None when the concurrence stays positive over the whole scan
    ("no boundary"), a single bisected value when there is exactly one
    alive-to-dead transition, and the list of all bracketing intervals when
    the zero set is non-monotone (more than one transition).
    """
    if q.scan not in _PARAM_DOMAINS or set(q.fixed) != set(_PARAM_DOMAINS) - {q.scan}:
        raise BadSweepSpecError(f"scan={q.scan!r} with fixed={dict(q.fixed)!r}")
    lo_dom, hi_dom = _PARAM_DOMAINS[q.scan]
    if not (lo_dom - 1e-12 <= q.lo < q.hi <= hi_dom + 1e-12):
        raise BadSweepSpecError(f"scan range [{q.lo}, {q.hi}] invalid for {q.scan}")

    xs = np.linspace(q.lo, q.hi, prescan_points)
    dead = [q.concurrence_at(float(x)) <= ESD_THRESHOLD for x in xs]
    if not any(dead):
        return None
    if dead[0]:
        return float(q.lo)
    brackets = [
        (float(xs[i]), float(xs[i + 1]))
        for i in range(len(xs) - 1)
        if dead[i] != dead[i + 1]
    ]
    if len(brackets) > 1:
        return brackets
    lo, hi = brackets[0]
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if q.concurrence_at(mid) <= ESD_THRESHOLD:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _fmt(x: float) -> str:
    return format(x, ".12g")


def rows_to_csv(rows: Sequence) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                (
                    _fmt(row.mu), _fmt(row.p), _fmt(row.r),
                    row.channel, row.state,
                    _fmt(row.c_closed), _fmt(row.c_oracle), _fmt(row.delta),
                )
            )
        )
    return "\n".join(lines) + "\n"


def emit_csv(rows: Sequence, path) -> None:
    """12-significant-digit CSV, LF endings, UTF-8; header-only when empty."""
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(rows_to_csv(rows))
    except OSError as exc:
        raise OSError(f"cannot write sweep CSV to {path}: {exc}") from exc
