"""Entanglement of two-qubit states via concurrence.

Three routes:

* ``wootters_concurrence`` - the general mixed-state formula, with the
  spin-flipped spectrum computed through the Hermitian similarity
  sqrt(rho) rho~ sqrt(rho) so the lambdas are guaranteed real.
* ``xstate_concurrence`` - the anti-diagonal shortcut valid for X-form
  matrices; must agree with Wootters to 1e-10 on every X state.
* ``closed_form_concurrence`` - verbatim transcriptions of the published
  per-channel expressions. These are kept exactly as printed; see
  docs/closed_form_audit.md for how far they sit from the operator-sum
  oracle (the oracle is ground truth).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channels import ChannelKind
from .errors import ClosedFormDomainError, NotXFormError
from .linalg import SIGMA_Y, as_matrix, psd_sqrt, tensor
from .xstate import XStateCoeffs, is_x_form

METHOD_AGREEMENT_TOL = 1e-10
_SYSY = tensor(SIGMA_Y, SIGMA_Y)


@dataclass(frozen=True)
class ConcurrenceResult:
    value: float
    method: str
    lambdas: Optional[tuple] = None


def _clamp01(x: float) -> float:
    return min(1.0, max(0.0, x))


def spin_flip(rho) -> np.ndarray:
    """(sy x sy) conj(rho) (sy x sy), conjugation taken entrywise."""
    rho = as_matrix(rho)
    return _SYSY @ np.conjugate(rho) @ _SYSY


def wootters_concurrence(rho) -> ConcurrenceResult:
    """max(0, l1 - l2 - l3 - l4) over the descending spin-flip spectrum.

    The lambdas are the singular values of sqrt(rho) (sy x sy) conj(sqrt(rho)),
    whose Gram matrix is the Hermitian similarity sqrt(rho) rho~ sqrt(rho) of
    rho rho~. Extracting them as singular values rather than square roots of
    eigenvalues keeps the near-zero lambdas at eps-level absolute error
    (a final sqrt would amplify eigenvalue round-off to ~1e-8).
    """
    rho = as_matrix(rho)
    root = psd_sqrt(rho)
    core = root @ _SYSY @ np.conjugate(root)
    lam = np.linalg.svd(core, compute_uv=False)
    value = lam[0] - lam[1] - lam[2] - lam[3]
    return ConcurrenceResult(_clamp01(value), "wootters", tuple(float(x) for x in lam))


def xstate_concurrence(rho) -> ConcurrenceResult:
    """2 max(0, |corner| - sqrt(inner diag product), |inner| - sqrt(outer))."""
    rho = as_matrix(rho)
    if rho.shape[0] != 4 or not is_x_form(rho):
        raise NotXFormError("matrix has weight outside the diagonal and anti-diagonal")
    d = np.real(np.diag(rho))
    corner = math.sqrt(abs(rho[0, 3] * rho[3, 0]))
    inner = math.sqrt(abs(rho[1, 2] * rho[2, 1]))
    branch_corner = corner - math.sqrt(max(d[1] * d[2], 0.0))
    branch_inner = inner - math.sqrt(max(d[0] * d[3], 0.0))
    value = 2.0 * max(0.0, branch_corner, branch_inner)
    return ConcurrenceResult(_clamp01(value), "xform")


def _checked_sqrt(x: float, label: str) -> float:
    # round-off negatives are clamped; materially negative radicands are a
    # convention mismatch and must surface, not vanish
    if x < -1e-9:
        raise ClosedFormDomainError(label, x)
    return math.sqrt(max(x, 0.0))


def _closed_ad(cp, cm, c3, r, p, mu) -> float:
    c2 = math.cos(r) ** 2
    cos2r = math.cos(2.0 * r)
    first = 2.0 * _checked_sqrt(cp * cp * (p * (mu - 1) + 1) ** 2 * c2, "damping coherence term")
    f1 = 2 * (c3 + 1) * p * mu * c2 + ((p - 2) * p * (mu - 1) - 1) * (c3 + (c3 + 1) * cos2r - 3)
    f2 = (p + 1) * (mu - 1) * (c3 * (p - 1) + (c3 + 1) * cos2r * (p - 1) - 3 * p - 1) \
        - 2 * (c3 + 1) * (p - 1) * mu * c2
    return (first - _checked_sqrt(f1 * f2, "damping diagonal term")) / 8.0


def _closed_dep(cp, cm, c3, r, p, mu) -> float:
    c2 = math.cos(r) ** 2
    g = (c3 + 1) * p * (cm * mu + cp * (-4 * p + (4 * p - 7) * mu + 4)) * c2
    g1 = g - 2 * cp * (p * (mu - 2) + 4)
    g2 = g - 2 * (cp * (4 * (mu - 1) * p * p + (6 - 8 * mu) * p - 4) + cm * p * mu)
    r1 = -c2 * g1 * g2
    h1 = (-4 * (mu - 1) * p * p + 8 * (mu - 1) * p + 4) * cm * cm - cp * p * mu * cm \
        + (c3 + 1) ** 2 * (p * (mu - 4) + 4) * c2 + 4 * (c3 + 1) * p
    h2 = 0.25 * (c3 + 1) ** 2 * (p * (mu - 4) + 4) * c2 * c2 \
        - 0.25 * (4 * ((mu - 1) * p * p - 2 * (mu - 1) * p - 1) * cm * cm + cp * p * mu * cm
                  + 4 * c3 * (p * (mu - 3) + 4) + 4 * (p * (mu - 3) + 4)) * c2 \
        + p * (mu - 2) + 4
    r2 = c2 * h1 * h2
    return (_checked_sqrt(r1, "depolarizing coherence term")
            - 2.0 * _checked_sqrt(r2, "depolarizing diagonal term")) / 16.0


def _closed_bf(cp, cm, c3, r, p, mu) -> float:
    c2 = math.cos(r) ** 2
    amp = cp * (2 * (mu - 1) * p * p - 2 * (mu - 1) * p - 1) \
        + 2 * cm * p * (-mu * p + p + mu - 1)
    q1 = 2 * p - (c3 + 1) * (2 * p - 1) * c2
    q2 = (c3 + 1) * (2 * p - 1) * c2 - 2 * p + 2
    return _checked_sqrt(amp * amp * c2, "bit-flip coherence term") \
        - 0.5 * _checked_sqrt(q1 * q2, "bit-flip diagonal term")


_CLOSED_FORMS = {
    ChannelKind.AMPLITUDE_DAMPING: _closed_ad,
    ChannelKind.DEPOLARIZING: _closed_dep,
    ChannelKind.BIT_FLIP: _closed_bf,
}


def closed_form_concurrence(
    kind: ChannelKind,
    c: XStateCoeffs,
    r: float,
    p: float,
    mu: float,
    magnitudes_mode: bool = True,
) -> ConcurrenceResult:
    """Evaluate the printed per-channel expression, clamped to [0, 1].

    magnitudes_mode substitutes |c_i|; otherwise the signed coefficients
    enter through c_plus and c_minus.
    """
    cc = c.magnitudes() if magnitudes_mode else c
    raw = _CLOSED_FORMS[kind](cc.c_plus, cc.c_minus, cc.c3, r, p, mu)
    return ConcurrenceResult(_clamp01(raw), "closed")
