"""Dense complex linear algebra for small fixed-size operators.

Everything in the library is an ordinary complex128 ndarray of dimension
2, 4 or 8. The helpers here are the only place the rest of the code talks
to numpy.linalg, so the numerical contracts (tolerances, ordering,
clamping of round-off negatives) live in one module.
"""

from __future__ import annotations

import numpy as np

from .errors import BadPartitionError, NotHermitianError, NotPSDError

ID2 = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS = (ID2, SIGMA_X, SIGMA_Y, SIGMA_Z)

HERMITICITY_TOL = 1e-10
NEGATIVE_EIG_TOL = 1e-10


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def dagger(m) -> np.ndarray:
    return np.conjugate(np.transpose(as_matrix(m)))


def tensor(a, b) -> np.ndarray:
    """Kronecker product, with the left factor owning the slow index."""
    return np.kron(as_matrix(a), as_matrix(b))


def partial_trace(m, subsystem_dims, traced_index: int) -> np.ndarray:
    """Trace out one tensor factor of a multipartite operator.

    subsystem_dims lists the factor dimensions in tensor order; their
    product must equal the matrix dimension.
    """
    m = as_matrix(m)
    dims = [int(d) for d in subsystem_dims]
    if any(d <= 0 for d in dims) or int(np.prod(dims)) != m.shape[0]:
        raise BadPartitionError(
            f"subsystem dims {dims} do not factor dimension {m.shape[0]}"
        )
    if not 0 <= traced_index < len(dims):
        raise BadPartitionError(
            f"traced index {traced_index} out of range for {len(dims)} subsystems"
        )
    reshaped = m.reshape(dims + dims)
    out = np.trace(reshaped, axis1=traced_index, axis2=traced_index + len(dims))
    kept = m.shape[0] // dims[traced_index]
    return np.asarray(out).reshape(kept, kept)


def hermiticity_residual(m) -> float:
    m = as_matrix(m)
    return float(np.max(np.abs(m - np.conjugate(m.T)))) if m.size else 0.0


def hermitian_eigensystem(m, tol: float = HERMITICITY_TOL):
    """Eigenvalues (descending, real) and matching eigenvector columns."""
    m = as_matrix(m)
    res = hermiticity_residual(m)
    if res > tol:
        raise NotHermitianError(f"matrix is not Hermitian (residual {res:.3e})")
    vals, vecs = np.linalg.eigh(m)
    return vals[::-1].copy(), vecs[:, ::-1].copy()


def hermitian_eigenvalues(m, tol: float = HERMITICITY_TOL) -> np.ndarray:
    vals, _ = hermitian_eigensystem(m, tol=tol)
    return vals


def psd_sqrt(m, neg_tol: float = NEGATIVE_EIG_TOL) -> np.ndarray:
    """Hermitian square root of a PSD matrix.

    Eigenvalues in [-neg_tol, 0), the usual round-off debris of channel
    compositions, are clamped to zero; anything more negative raises.
    """
    vals, vecs = hermitian_eigensystem(m)
    if vals[-1] < -neg_tol:
        raise NotPSDError(f"materially negative eigenvalue {vals[-1]:.3e}")
    root = (vecs * np.sqrt(np.clip(vals, 0.0, None))) @ np.conjugate(vecs.T)
    return (root + np.conjugate(root.T)) / 2.0
