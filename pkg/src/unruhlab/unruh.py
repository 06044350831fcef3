"""Transformation of the shared state into the accelerated observer's frame.

The accelerated partner (Rob) accesses only Rindler wedge I; the mode
mixing between the wedges is parametrized by r in [0, pi/4], with r = 0 the
inertial limit and r = pi/4 the infinite-acceleration limit. Two routes are
provided: the closed-form 4x4 result, and an explicit three-qubit
construction (Alice x wedge I x wedge II) followed by a partial trace. They
must agree to 1e-12 and the second serves as the brute-force oracle for the
first.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import BadPhysicalParamError, BadRindlerParamError
from .linalg import partial_trace
from .xstate import Strictness, XStateCoeffs, build_x_state

SPEED_OF_LIGHT = 299_792_458.0
R_MAX = math.pi / 4


def acceleration_to_r(accel: float, omega: float, light_speed: float = SPEED_OF_LIGHT) -> float:
    """Map a proper acceleration and mode frequency to the wedge-mixing angle.

    cos r = (exp(-2 pi omega c / a) + 1)^(-1/2), so r runs from 0 at zero
    acceleration to pi/4 in the infinite-acceleration limit.
    """
    for name, v in (("accel", accel), ("omega", omega), ("light_speed", light_speed)):
        if not (math.isfinite(v) and v > 0):
            raise BadPhysicalParamError(f"{name} must be positive and finite, got {v!r}")
    cos_r = (math.exp(-2.0 * math.pi * omega * light_speed / accel) + 1.0) ** -0.5
    return math.acos(min(1.0, cos_r))


def _check_r(r: float) -> None:
    if not (math.isfinite(r) and -1e-12 <= r <= R_MAX + 1e-12):
        raise BadRindlerParamError(f"r={r!r} outside [0, pi/4]")


def unruh_transform(c: XStateCoeffs, r: float) -> np.ndarray:
    """Closed-form state seen by inertial Alice and wedge-I Rob.

    Each inertial weight (1 +/- c3)/4 is redistributed between Rob's levels
    by cos^2 r / sin^2 r, and both anti-diagonal coherences pick up a single
    factor of cos r. At r = 0 this is exactly the inertial X state.
    """
    _check_r(r)
    cos_r = math.cos(r)
    c2, s2 = cos_r * cos_r, math.sin(r) ** 2
    hi, lo = 1.0 + c.c3, 1.0 - c.c3
    rho = np.zeros((4, 4), dtype=np.complex128)
    rho[0, 0] = hi * c2
    rho[1, 1] = lo + hi * s2
    rho[2, 2] = lo * c2
    rho[3, 3] = hi + lo * s2
    rho[0, 3] = rho[3, 0] = c.c_minus * cos_r
    rho[1, 2] = rho[2, 1] = c.c_plus * cos_r
    return 0.25 * rho


def _wedge_isometry(r: float) -> np.ndarray:
    """Rob's level embedding into wedge I x wedge II.

    |0> goes to cos r |0,0> + sin r |1,1>; |1> goes to |1,0>.
    """
    v = np.zeros((4, 2), dtype=np.complex128)
    v[0, 0] = math.cos(r)
    v[3, 0] = math.sin(r)
    v[2, 1] = 1.0
    return v


def unruh_oracle(c: XStateCoeffs, r: float) -> np.ndarray:
    """Brute-force route: spectral ensemble, 8-dim embedding, wedge-II trace.

    The inertial state is expanded into its eigen-ensemble, each member is
    pushed through the wedge embedding on Rob's factor, the weighted 8x8
    mixture is reassembled, and the causally hidden wedge II is traced out.
    """
    _check_r(r)
    rho4 = build_x_state(c, Strictness.PAPER_CONVENTION)
    vals, vecs = np.linalg.eigh(rho4)
    embed = np.kron(np.eye(2, dtype=np.complex128), _wedge_isometry(r))
    rho8 = np.zeros((8, 8), dtype=np.complex128)
    for weight, vec in zip(vals, vecs.T):
        psi = embed @ vec
        rho8 += weight * np.outer(psi, np.conjugate(psi))
    return partial_trace(rho8, [2, 2, 2], 2)
