"""Noise channels with partial memory between the two uses.

The pair of qubits passes through the same environment; with probability mu
the second use repeats the first use's error operator, with probability
1 - mu the uses are independent. Three channel families are provided
(amplitude damping, depolarizing, bit flip) plus two application modes:

* ``SINGLE_CORRELATED_USE`` - one application of the correlated two-qubit
  Kraus set (the canonical mode).
* ``DOUBLE_STREAMED`` - each qubit independently streamed through the
  single-qubit channel, i.e. the memory-free product map; mu is inert here.
  Kept behind a flag so sweeps can compare the two readings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import (
    BadProbabilityError,
    ChannelNotTracePreservingError,
    NotAPauliChannelError,
)
from .linalg import PAULIS, as_matrix, tensor

COMPLETENESS_TOL = 1e-12

# the 16 fixed pair operators s_i x s_j, row-major in (i, j)
_PAULI_PAIRS = tuple(tensor(a, b) for a in PAULIS for b in PAULIS)


class ChannelKind(str, Enum):
    AMPLITUDE_DAMPING = "ad"
    DEPOLARIZING = "dep"
    BIT_FLIP = "bf"


class ApplicationMode(str, Enum):
    SINGLE_CORRELATED_USE = "single"
    DOUBLE_STREAMED = "double"


def _check_unit_interval(name: str, v: float) -> None:
    if not (math.isfinite(v) and -1e-12 <= v <= 1.0 + 1e-12):
        raise BadProbabilityError(f"{name}={v!r} outside [0, 1]")


@dataclass(frozen=True)
class ChannelSpec:
    kind: ChannelKind
    p: float
    mu: float = 0.0
    application: ApplicationMode = ApplicationMode.SINGLE_CORRELATED_USE

    def __post_init__(self):
        _check_unit_interval("p", self.p)
        _check_unit_interval("mu", self.mu)


@dataclass(frozen=True)
class KrausSet:
    """Operators of one CPTP map, optionally carrying per-operator weights.

    With weights w_k the map is rho -> sum_k w_k K_k rho K_k^dag and the
    completeness condition reads sum_k w_k K_k^dag K_k = 1. weights=None
    means every weight is one (the usual convention where the square roots
    are folded into the operators).
    """

    dim: int
    ops: tuple = field(default_factory=tuple)
    weights: Optional[tuple] = None

    def effective_weights(self) -> tuple:
        return self.weights if self.weights is not None else (1.0,) * len(self.ops)


def completeness_residual(kset: KrausSet) -> float:
    ops = np.stack(kset.ops)
    w = np.asarray(kset.effective_weights())
    acc = np.einsum("k,kij,kil->jl", w, np.conjugate(ops), ops)
    return float(np.max(np.abs(acc - np.eye(kset.dim))))


def single_qubit_kraus(kind: ChannelKind, p: float) -> KrausSet:
    """One-use operator sets; p is the decoherence strength."""
    _check_unit_interval("p", p)
    q = 1.0 - p
    if kind is ChannelKind.AMPLITUDE_DAMPING:
        ops = (
            np.array([[1, 0], [0, math.sqrt(q)]], dtype=np.complex128),
            np.array([[0, math.sqrt(p)], [0, 0]], dtype=np.complex128),
        )
    elif kind is ChannelKind.DEPOLARIZING:
        ops = tuple(
            math.sqrt(w) * sigma
            for w, sigma in zip(pauli_probabilities(kind, p), PAULIS)
        )
    elif kind is ChannelKind.BIT_FLIP:
        ops = (math.sqrt(q) * PAULIS[0], math.sqrt(p) * PAULIS[1])
    else:  # pragma: no cover
        raise ValueError(f"unhandled channel kind {kind!r}")
    return KrausSet(dim=2, ops=ops)


def pauli_probabilities(kind: ChannelKind, p: float) -> tuple:
    """Error distribution over (1, sx, sy, sz) for the Pauli-type channels."""
    _check_unit_interval("p", p)
    if kind is ChannelKind.DEPOLARIZING:
        return (1.0 - 0.75 * p, 0.25 * p, 0.25 * p, 0.25 * p)
    if kind is ChannelKind.BIT_FLIP:
        return (1.0 - p, p, 0.0, 0.0)
    raise NotAPauliChannelError(f"{kind.value} has no Pauli error distribution")


def correlated_pauli_kraus(kind: ChannelKind, p: float, mu: float) -> KrausSet:
    """All 16 pair operators sqrt(p_i [(1-mu) p_j + mu delta_ij]) s_i x s_j.

    Zero-weight members are kept so the index layout stays the full 4x4
    grid; at mu = 0 the set factorizes into independent uses and at mu = 1
    only the matched-error diagonal survives.
    """
    _check_unit_interval("mu", mu)
    probs = pauli_probabilities(kind, p)
    ops = []
    for i in range(4):
        for j in range(4):
            w = probs[i] * ((1.0 - mu) * probs[j] + (mu if i == j else 0.0))
            ops.append(math.sqrt(max(w, 0.0)) * _PAULI_PAIRS[i * 4 + j])
    return KrausSet(dim=4, ops=tuple(ops))


def correlated_ad_kraus(p: float, mu: float) -> KrausSet:
    """Mixture-form damping channel: uncorrelated and fully correlated branches.

    The uncorrelated branch is the four tensor products of the one-use
    operators, weighted 1 - mu. The correlated branch has two operators,
    diag(cos chi, 1, 1, 1) and the single corner entry sin chi at (3, 0),
    weighted mu, with sin chi = sqrt(p). Weighted completeness is exact.
    """
    _check_unit_interval("p", p)
    _check_unit_interval("mu", mu)
    single = single_qubit_kraus(ChannelKind.AMPLITUDE_DAMPING, p).ops
    uncorrelated = tuple(tensor(a, b) for a in single for b in single)
    sin_chi = math.sqrt(p)
    cos_chi = math.sqrt(max(1.0 - p, 0.0))
    c00 = np.diag([cos_chi, 1.0, 1.0, 1.0]).astype(np.complex128)
    c11 = np.zeros((4, 4), dtype=np.complex128)
    c11[3, 0] = sin_chi
    ops = uncorrelated + (c00, c11)
    weights = (1.0 - mu,) * 4 + (mu,) * 2
    return KrausSet(dim=4, ops=ops, weights=weights)


def _double_streamed_kraus(kind: ChannelKind, p: float) -> KrausSet:
    single = single_qubit_kraus(kind, p).ops
    ops = tuple(tensor(a, b) for a in single for b in single)
    return KrausSet(dim=4, ops=ops)


@lru_cache(maxsize=8192)
def two_qubit_kraus(spec: ChannelSpec) -> KrausSet:
    if spec.application is ApplicationMode.DOUBLE_STREAMED:
        return _double_streamed_kraus(spec.kind, spec.p)
    if spec.kind is ChannelKind.AMPLITUDE_DAMPING:
        return correlated_ad_kraus(spec.p, spec.mu)
    return correlated_pauli_kraus(spec.kind, spec.p, spec.mu)


def apply_kraus(rho, kset: KrausSet) -> np.ndarray:
    rho = as_matrix(rho)
    if rho.shape[0] != kset.dim:
        raise ValueError(f"state dim {rho.shape[0]} != operator dim {kset.dim}")
    ops = np.stack(kset.ops)
    w = np.asarray(kset.effective_weights())
    return np.einsum("k,kij,jl,kml->im", w, ops, rho, np.conjugate(ops))


@lru_cache(maxsize=8192)
def _verified_kraus(spec: ChannelSpec) -> KrausSet:
    kset = two_qubit_kraus(spec)
    residual = completeness_residual(kset)
    if residual > COMPLETENESS_TOL:
        raise ChannelNotTracePreservingError(
            f"completeness residual {residual:.3e} for {spec}"
        )
    return kset


def apply_channel(rho, spec: ChannelSpec) -> np.ndarray:
    """Operator-sum application of the channel described by spec."""
    return apply_kraus(rho, _verified_kraus(spec))
