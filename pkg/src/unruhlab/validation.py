"""Invariant suite behind the `validate` CLI subcommand.

Hard checks (failures flip the exit code): construction-level identities
that must hold for any faithful implementation. Diagnostics (reported, not
enforced): distance between the published closed-form expressions and the
operator-sum oracle, which is known to be large; see
docs/closed_form_audit.md.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import (
    ApplicationMode,
    ChannelKind,
    ChannelSpec,
    completeness_residual,
    two_qubit_kraus,
)
from .concurrence import wootters_concurrence, xstate_concurrence
from .errors import ClosedFormDomainError
from .sweep import evolve_state, point_concurrence
from .unruh import R_MAX, unruh_oracle, unruh_transform
from .xstate import (
    Strictness,
    XStateCoeffs,
    build_x_state,
    is_x_form,
    state_preset,
    x_state_eigenvalues,
)

ALL_KINDS = tuple(ChannelKind)
ALL_MODES = tuple(ApplicationMode)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _grid(n: int, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
    return np.linspace(lo, hi, n)


def check_unruh_oracle(n_c: int = 5, n_r: int = 9) -> CheckResult:
    worst = 0.0
    vals = np.linspace(-1.0, 1.0, n_c)
    for c1 in vals:
        for c2 in vals:
            for c3 in vals:
                c = XStateCoeffs(c1, c2, c3)
                for r in _grid(n_r, 0.0, R_MAX):
                    dev = np.max(np.abs(unruh_oracle(c, r) - unruh_transform(c, r)))
                    worst = max(worst, float(dev))
    return CheckResult(
        "unruh closed form vs 8-dim oracle", worst <= 1e-12, f"max dev {worst:.3e} (tol 1e-12)"
    )


def check_completeness(n: int = 21) -> CheckResult:
    worst = 0.0
    for kind in ALL_KINDS:
        for mode in ALL_MODES:
            for p in _grid(n):
                for mu in _grid(n):
                    res = completeness_residual(
                        two_qubit_kraus(ChannelSpec(kind, float(p), float(mu), mode))
                    )
                    worst = max(worst, res)
    return CheckResult(
        "Kraus completeness", worst <= 1e-12, f"max residual {worst:.3e} (tol 1e-12)"
    )


def check_state_contracts(samples: int = 60, seed: int = 7) -> CheckResult:
    """Trace, Hermiticity and X-form preservation through the pipeline."""
    rng = np.random.default_rng(seed)
    worst_trace = worst_herm = 0.0
    ok_x = True
    for _ in range(samples):
        w = rng.dirichlet(np.ones(4))
        # physical X states are mixtures of the four anti-diagonal corners
        corners = [(1, -1, 1), (-1, 1, 1), (1, 1, -1), (-1, -1, -1)]
        c = XStateCoeffs(*(sum(wi * np.array(v) for wi, v in zip(w, corners))))
        kind = ALL_KINDS[int(rng.integers(3))]
        mode = ALL_MODES[int(rng.integers(2))]
        spec = ChannelSpec(kind, float(rng.uniform()), float(rng.uniform()), mode)
        rho = evolve_state(c, float(rng.uniform(0, R_MAX)), spec)
        worst_trace = max(worst_trace, abs(float(np.real(np.trace(rho))) - 1.0))
        worst_herm = max(worst_herm, float(np.max(np.abs(rho - rho.conj().T))))
        ok_x = ok_x and is_x_form(rho)
    passed = worst_trace <= 1e-10 and worst_herm <= 1e-10 and ok_x
    return CheckResult(
        "pipeline trace/Hermiticity/X-form",
        passed,
        f"trace dev {worst_trace:.3e}, herm dev {worst_herm:.3e}, x-form {ok_x}",
    )


def check_method_agreement(n: int = 6) -> CheckResult:
    worst = 0.0
    bell = state_preset("bell")
    for kind in ALL_KINDS:
        for p in _grid(n):
            for mu in _grid(n):
                for r in _grid(3, 0.0, R_MAX):
                    rho = evolve_state(bell.coeffs, float(r), ChannelSpec(kind, float(p), float(mu)))
                    dev = abs(wootters_concurrence(rho).value - xstate_concurrence(rho).value)
                    worst = max(worst, dev)
    return CheckResult(
        "Wootters vs X-form shortcut", worst <= 1e-10, f"max dev {worst:.3e} (tol 1e-10)"
    )


def check_mu_affinity(n: int = 7) -> CheckResult:
    """Channel output must be the mu-affine blend of its mu=0 and mu=1 maps."""
    worst = 0.0
    bell = state_preset("bell")
    for kind in ALL_KINDS:
        for p in _grid(n):
            for mu in _grid(n):
                rho_in = unruh_transform(bell.coeffs, 0.3)
                blend = (1.0 - mu) * evolve_state(bell.coeffs, 0.3, ChannelSpec(kind, float(p), 0.0)) \
                    + mu * evolve_state(bell.coeffs, 0.3, ChannelSpec(kind, float(p), 1.0))
                direct = evolve_state(bell.coeffs, 0.3, ChannelSpec(kind, float(p), float(mu)))
                worst = max(worst, float(np.max(np.abs(blend - direct))))
                del rho_in
    return CheckResult(
        "memory interpolation (affine in mu)", worst <= 1e-12, f"max dev {worst:.3e}"
    )


def check_x_eigenvalues(samples: int = 40, seed: int = 11) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        c = XStateCoeffs(*rng.uniform(-1, 1, 3))
        rho = build_x_state(c, Strictness.PAPER_CONVENTION)
        got = np.sort(np.linalg.eigvalsh(rho))[::-1]
        want = x_state_eigenvalues(c)
        worst = max(worst, float(np.max(np.abs(got - want))))
    return CheckResult(
        "X-state spectrum closed form", worst <= 1e-12, f"max dev {worst:.3e}"
    )


def closed_form_deltas(n_p: int = 11, n_mu: int = 11, n_r: int = 9) -> list:
    """Per channel/mode/convention distance of the printed expressions from
    the oracle pipeline, on the Bell preset. Diagnostic only."""
    bell = state_preset("bell")
    out = []
    for kind in ALL_KINDS:
        for mode in ALL_MODES:
            for convention, mags in (("magnitudes", True), ("signed", False)):
                worst, arg, domain_errors = 0.0, None, 0
                for p in _grid(n_p):
                    for mu in _grid(n_mu):
                        for r in _grid(n_r, 0.0, R_MAX):
                            spec = ChannelSpec(kind, float(p), float(mu), mode)
                            oracle = point_concurrence(bell.coeffs, float(r), spec, "wootters")
                            try:
                                closed = point_concurrence(
                                    bell.coeffs, float(r), spec, "closed", magnitudes_mode=mags
                                )
                            except ClosedFormDomainError:
                                domain_errors += 1
                                continue
                            dev = abs(closed - oracle)
                            if dev > worst:
                                worst, arg = dev, (float(p), float(mu), float(r))
                out.append(
                    dict(channel=kind.value, mode=mode.value, convention=convention,
                         max_delta=worst, argmax=arg, domain_errors=domain_errors)
                )
    return out


def run_validation(fast: bool = False) -> tuple:
    """Returns (all_hard_checks_passed, report_lines)."""
    scale = 0.5 if fast else 1.0

    def n(x: int) -> int:
        return max(3, int(round(x * scale)))

    checks = [
        check_unruh_oracle(n(5), n(9)),
        check_completeness(n(21)),
        check_state_contracts(n(60)),
        check_method_agreement(n(6)),
        check_mu_affinity(n(7)),
        check_x_eigenvalues(n(40)),
    ]
    lines = []
    ok = True
    for chk in checks:
        ok = ok and chk.passed
        lines.append(f"[{'PASS' if chk.passed else 'FAIL'}] {chk.name}: {chk.detail}")
    lines.append("")
    lines.append("closed-form vs oracle (diagnostic, not a gate; see docs/closed_form_audit.md):")
    for rec in closed_form_deltas(n(11), n(11), n(9)):
        arg = rec["argmax"]
        at = f"(p={arg[0]:.2f}, mu={arg[1]:.2f}, r={arg[2]:.3f})" if arg else "n/a"
        lines.append(
            f"  {rec['channel']:3s} {rec['mode']:6s} {rec['convention']:10s} "
            f"max|closed-oracle|={rec['max_delta']:.4f} at {at}"
            + (f", domain errors={rec['domain_errors']}" if rec["domain_errors"] else "")
        )
    return ok, lines
