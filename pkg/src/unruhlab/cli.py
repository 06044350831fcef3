"""Command-line front end.

Subcommands: concurrence (single point), sweep (generic grid), figure
(fig1..fig6 presets), esd (boundary scan), validate (invariant suite).
Exit codes: 0 success, 2 validation failure, 3 bad arguments.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .channels import ApplicationMode, ChannelKind, ChannelSpec
from .errors import (
    BadPlotRequestError,
    ClosedFormDomainError,
    NotPSDError,
    UnruhlabError,
)
from .sweep import (
    ESD_THRESHOLD,
    EsdQuery,
    GridSpec,
    SweepSpec,
    emit_csv,
    esd_boundary,
    figure_scan_param,
    point_concurrence,
    run_figure,
    run_sweep,
)
from .svgplot import emit_svg_lineplot
from .unruh import R_MAX, acceleration_to_r
from .validation import run_validation
from .xstate import (
    Strictness,
    XStateCoeffs,
    build_x_state,
    custom_preset,
    state_diagnostics,
    state_preset,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BAD_ARGS = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; this tool reserves 2 for
    # validation failures, so remap to 3
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_BAD_ARGS)


def _parse_state(text: str):
    if text.startswith("custom:"):
        try:
            c1, c2, c3 = (float(x) for x in text[len("custom:"):].split(","))
        except ValueError:
            raise UnruhlabError(f"cannot parse {text!r}; expected custom:c1,c2,c3") from None
        return custom_preset(XStateCoeffs(c1, c2, c3))
    return state_preset(text)


def _parse_grid(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) == 1:
        return GridSpec.fixed(float(parts[0]))
    if len(parts) == 3:
        return GridSpec(float(parts[0]), float(parts[1]), int(parts[2]))
    raise UnruhlabError(f"cannot parse grid {text!r}; expected VALUE or START:STOP:COUNT")


def _resolve_r(args) -> float:
    if getattr(args, "accel", None) is not None or getattr(args, "omega", None) is not None:
        if args.accel is None or args.omega is None:
            raise UnruhlabError("--accel and --omega must be given together")
        return acceleration_to_r(args.accel, args.omega, args.light_speed)
    return args.r


def _add_common(sub, with_point_params=True):
    sub.add_argument("--channel", choices=[k.value for k in ChannelKind], default="ad")
    sub.add_argument("--state", default="bell",
                     help="bell|werner|general|custom:c1,c2,c3")
    sub.add_argument("--application", choices=[m.value for m in ApplicationMode],
                     default="single")
    strict = sub.add_mutually_exclusive_group()
    strict.add_argument("--strict", dest="strict", action="store_true")
    strict.add_argument("--paper-convention", dest="strict", action="store_false")
    sub.set_defaults(strict=False)
    if with_point_params:
        sub.add_argument("--p", type=float, default=0.0)
        sub.add_argument("--mu", type=float, default=0.0)
        sub.add_argument("--r", type=float, default=0.0)
        sub.add_argument("--accel", type=float, default=None,
                         help="proper acceleration (m/s^2); use with --omega instead of --r")
        sub.add_argument("--omega", type=float, default=None,
                         help="mode frequency (rad/s); use with --accel")
        sub.add_argument("--light-speed", type=float, default=299_792_458.0)


def build_parser() -> _Parser:
    parser = _Parser(prog="unruhlab",
                     description="Concurrence of an accelerated two-qubit X state under correlated noise")
    subs = parser.add_subparsers(dest="command", required=True)

    conc = subs.add_parser("concurrence", help="single-point concurrence")
    _add_common(conc)
    conc.add_argument("--method", choices=["wootters", "xform", "closed"], default="wootters")

    sweep = subs.add_parser("sweep", help="grid sweep to CSV/SVG")
    _add_common(sweep, with_point_params=False)
    sweep.add_argument("--mu", type=str, default="0", help="VALUE or START:STOP:COUNT")
    sweep.add_argument("--p", type=str, default="0", help="VALUE or START:STOP:COUNT")
    sweep.add_argument("--r", type=str, default="0", help="VALUE or START:STOP:COUNT")
    sweep.add_argument("--out", type=Path, required=True)
    sweep.add_argument("--format", choices=["csv", "svg", "both"], default="csv")
    sweep.add_argument("--x-param", choices=["mu", "p", "r"], default=None,
                       help="scanned axis for SVG output (inferred when unique)")

    fig = subs.add_parser("figure", help="emit a published-figure data set")
    fig.add_argument("name", choices=["fig1", "fig2", "fig3", "fig4", "fig5", "fig6"])
    fig.add_argument("--application", choices=[m.value for m in ApplicationMode] + ["both"],
                     default="single")
    fig.add_argument("--out", type=Path, required=True)
    fig.add_argument("--format", choices=["csv", "svg", "both"], default="csv")

    esd = subs.add_parser("esd", help="locate an entanglement-death boundary")
    _add_common(esd)
    esd.add_argument("--scan", choices=["mu", "p", "r"], required=True)
    esd.add_argument("--lo", type=float, default=None)
    esd.add_argument("--hi", type=float, default=None)
    esd.add_argument("--tol", type=float, default=1e-6)

    val = subs.add_parser("validate", help="run the invariant suite")
    val.add_argument("--fast", action="store_true", help="smaller grids")

    return parser


def _cmd_concurrence(args) -> int:
    preset = _parse_state(args.state)
    strictness = Strictness.STRICT if args.strict else Strictness.PAPER_CONVENTION
    build_x_state(preset.coeffs, strictness)  # strict-mode physicality gate
    r = _resolve_r(args)
    spec = ChannelSpec(ChannelKind(args.channel), args.p, args.mu,
                       ApplicationMode(args.application))
    diag = state_diagnostics(build_x_state(preset.coeffs))
    if diag.min_eigenvalue < -1e-10 and not args.strict:
        print(f"note: input state is not positive (min eigenvalue {diag.min_eigenvalue:.4g}); "
              "proceeding under the published convention", file=sys.stderr)
    value = point_concurrence(preset.coeffs, r, spec, args.method,
                              magnitudes_mode=preset.magnitudes_mode)
    print(format(value, ".12g"))
    return EXIT_OK


def _write_outputs(rows, out: Path, fmt: str, x_param) -> None:
    csv_path = out if out.suffix == ".csv" or fmt == "csv" else out.with_suffix(".csv")
    svg_path = out if out.suffix == ".svg" and fmt == "svg" else out.with_suffix(".svg")
    if fmt in ("csv", "both"):
        emit_csv(rows, csv_path)
        print(f"wrote {csv_path}")
    if fmt in ("svg", "both"):
        if x_param is None:
            raise BadPlotRequestError("no single scanned parameter; SVG output needs a line scan")
        emit_svg_lineplot(rows, x_param, [p for p in ("channel", "state", "mu", "p", "r")
                                          if p != x_param], svg_path)
        print(f"wrote {svg_path}")


def _cmd_sweep(args) -> int:
    preset = _parse_state(args.state)
    if args.strict:
        build_x_state(preset.coeffs, Strictness.STRICT)
    grids = {name: _parse_grid(getattr(args, name)) for name in ("mu", "p", "r")}
    spec = SweepSpec(
        channel=ChannelKind(args.channel),
        state=preset,
        mu_grid=grids["mu"],
        p_grid=grids["p"],
        r_grid=grids["r"],
        application=ApplicationMode(args.application),
    )
    rows = run_sweep(spec)
    x_param = args.x_param
    if x_param is None:
        scanned = [name for name, g in grids.items() if g.count > 1]
        x_param = scanned[0] if len(scanned) == 1 else None
    _write_outputs(rows, args.out, args.format, x_param)
    return EXIT_OK


def _cmd_figure(args) -> int:
    modes = ([ApplicationMode(args.application)]
             if args.application != "both" else list(ApplicationMode))
    code = EXIT_OK
    for mode in modes:
        rows = run_figure(args.name, mode)
        out = args.out
        if len(modes) > 1:
            out = out.with_name(f"{out.stem}-{mode.value}{out.suffix or '.csv'}")
        _write_outputs(rows, out, args.format, figure_scan_param(args.name))
        finite = [row.delta for row in rows if row.delta == row.delta]
        if finite:
            print(f"{args.name} [{mode.value}] max |closed - oracle| = {max(finite):.6g} "
                  f"over {len(rows)} rows")
    return code


def _cmd_esd(args) -> int:
    preset = _parse_state(args.state)
    scan = args.scan
    domains = {"mu": (0.0, 1.0), "p": (0.0, 1.0), "r": (0.0, R_MAX)}
    lo = domains[scan][0] if args.lo is None else args.lo
    hi = domains[scan][1] if args.hi is None else args.hi
    fixed = {name: getattr(args, name) for name in ("mu", "p", "r") if name != scan}
    if "r" in fixed:
        fixed["r"] = _resolve_r(args)
    query = EsdQuery(
        channel=ChannelKind(args.channel),
        state=preset,
        scan=scan,
        fixed=fixed,
        lo=lo,
        hi=hi,
        application=ApplicationMode(args.application),
    )
    result = esd_boundary(query, tol=args.tol)
    if result is None:
        print("NoBoundary")
    elif isinstance(result, list):
        print("multiple crossings:")
        for a, b in result:
            print(f"  [{a:.9g}, {b:.9g}]")
    else:
        print(format(result, ".9g"))
    return EXIT_OK


def _cmd_validate(args) -> int:
    ok, lines = run_validation(fast=args.fast)
    for line in lines:
        print(line)
    print()
    print("validation:", "PASS" if ok else "FAIL",
          f"(ESD threshold {ESD_THRESHOLD:g})")
    return EXIT_OK if ok else EXIT_VALIDATION


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "concurrence": _cmd_concurrence,
        "sweep": _cmd_sweep,
        "figure": _cmd_figure,
        "esd": _cmd_esd,
        "validate": _cmd_validate,
    }
    try:
        return handlers[args.command](args)
    except (NotPSDError, ClosedFormDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (UnruhlabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    raise SystemExit(main())
