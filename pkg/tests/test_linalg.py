import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unruhlab.errors import BadPartitionError, NotHermitianError, NotPSDError
from unruhlab.linalg import (
    ID2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    dagger,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    partial_trace,
    psd_sqrt,
    tensor,
)
from unruhlab.xstate import XStateCoeffs, build_x_state


def random_hermitian(rng, n=4):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (g + g.conj().T) / 2


def random_psd(rng, n=4):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    m = g @ g.conj().T
    return m / np.trace(m).real


class TestTensor:
    def test_identity_case(self):
        assert np.array_equal(tensor(ID2, ID2), np.eye(4))

    def test_sigma_x_pair_is_antidiagonal(self):
        got = tensor(SIGMA_X, SIGMA_X)
        assert np.array_equal(got, np.fliplr(np.eye(4)))

    def test_z_times_y_entry(self):
        # hand-expanded Kronecker product: entry (0, 1) is 1 * (-i)
        got = tensor(SIGMA_Z, SIGMA_Y)[0, 1]
        assert got.real == 0.0 and got.imag == -1.0

    def test_associative_on_integer_matrices(self, rng):
        for _ in range(20):
            a, b, c = (rng.integers(-3, 4, size=(2, 2)).astype(complex) for _ in range(3))
            left = tensor(tensor(a, b), c)
            right = tensor(a, tensor(b, c))
            assert np.array_equal(left, right)


class TestPartialTrace:
    def test_product_state_factorizes(self, rng):
        for _ in range(100):
            a, b = random_psd(rng, 2), random_psd(rng, 2)
            got = partial_trace(tensor(a, b), [2, 2], 1)
            assert np.max(np.abs(got - np.trace(b) * a)) < 1e-12

    def test_bell_marginal_is_maximally_mixed(self):
        phi = np.zeros(4, dtype=complex)
        phi[0] = phi[3] = 1 / np.sqrt(2)
        proj = np.outer(phi, phi.conj())
        got = partial_trace(proj, [2, 2], 0)
        assert np.max(np.abs(got - ID2 / 2)) < 1e-15

    def test_trace_preserved(self, rng):
        m = random_psd(rng, 8)
        for idx in range(3):
            red = partial_trace(m, [2, 2, 2], idx)
            assert abs(np.trace(red) - np.trace(m)) < 1e-12

    def test_bad_partition(self):
        with pytest.raises(BadPartitionError):
            partial_trace(np.eye(4), [2, 3], 0)
        with pytest.raises(BadPartitionError):
            partial_trace(np.eye(4), [2, 2], 2)


class TestHermitianEigenvalues:
    def test_identity(self):
        assert np.allclose(hermitian_eigenvalues(np.eye(4)), [1, 1, 1, 1])

    def test_diagonal(self):
        got = hermitian_eigenvalues(np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex))
        assert np.allclose(got, [0.4, 0.3, 0.2, 0.1], atol=1e-14)

    def test_werner_spectrum(self):
        # block closed form: (1 + c3 +/- (c1 - c2))/4 and (1 - c3 +/- (c1 + c2))/4
        rho = build_x_state(XStateCoeffs(-0.8, -0.8, -0.8))
        got = hermitian_eigenvalues(rho)
        assert np.allclose(got, [0.85, 0.05, 0.05, 0.05], atol=1e-12)

    def test_rejects_non_hermitian(self):
        m = np.array([[0, 1], [0, 0]], dtype=complex)
        with pytest.raises(NotHermitianError):
            hermitian_eigenvalues(m)

    def test_sum_matches_trace(self, rng):
        for _ in range(50):
            m = random_hermitian(rng)
            assert abs(hermitian_eigenvalues(m).sum() - np.trace(m).real) < 1e-10

    def test_eigenpair_residuals(self, rng):
        for _ in range(50):
            m = random_hermitian(rng)
            vals, vecs = hermitian_eigensystem(m)
            worst = max(
                np.max(np.abs(m @ vecs[:, k] - vals[k] * vecs[:, k])) for k in range(4)
            )
            assert worst < 1e-9

    def test_descending_order(self, rng):
        vals = hermitian_eigenvalues(random_hermitian(rng))
        assert all(vals[i] >= vals[i + 1] for i in range(3))


class TestPsdSqrt:
    def test_identity(self):
        assert np.allclose(psd_sqrt(np.eye(4)), np.eye(4))

    def test_diagonal(self):
        got = psd_sqrt(np.diag([4.0, 1.0, 0.0, 0.0]).astype(complex))
        assert np.allclose(got, np.diag([2.0, 1.0, 0.0, 0.0]), atol=1e-12)

    def test_square_recovers_input(self, rng):
        for _ in range(100):
            m = random_psd(rng)
            root = psd_sqrt(m)
            assert np.max(np.abs(root @ root - m)) < 1e-9
            assert np.max(np.abs(root - dagger(root))) < 1e-12

    def test_fourth_root_composition(self, rng):
        for _ in range(20):
            m = random_psd(rng)
            quarter = psd_sqrt(psd_sqrt(m))
            back = np.linalg.matrix_power(quarter, 4)
            assert np.max(np.abs(back - m)) < 1e-8

    def test_rejects_negative(self):
        with pytest.raises(NotPSDError):
            psd_sqrt(np.diag([1.0, 1.0, 1.0, -0.1]).astype(complex))

    def test_clamps_roundoff_negative(self):
        m = np.diag([1.0, 1.0, 1.0, -1e-12]).astype(complex)
        root = psd_sqrt(m)
        assert np.all(np.isfinite(root))


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_partial_trace_of_kron_scales_left_factor(seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    got = partial_trace(np.kron(a, b), [2, 2], 1)
    assert np.max(np.abs(got - np.trace(b) * a)) < 1e-12
