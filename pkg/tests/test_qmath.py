import math

import numpy as np
import pytest

from cavitypair import (
    DimensionMismatch,
    InvalidStep,
    NonHermitianInput,
    UnnormalizedState,
    evolve_spectral,
    hermitian_eigendecompose,
    hermiticity_defect,
    rk4_schrodinger,
)

OMEGA = 1.118033988749895  # sqrt(1 + 0.25)
T_PEAK = 1.8732839282775269  # 2 pi / (3 Omega)


def h_model(g1, rddi, g2=0.0):
    return np.array([[0.0, g1, g2], [g1, 0.0, rddi], [g2, rddi, 0.0]], dtype=complex)


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (a + a.conj().T)


def random_state(rng, n):
    psi = rng.normal(size=n) + 1j * rng.normal(size=n)
    return psi / np.linalg.norm(psi)


class TestEigendecompose:
    def test_identity(self):
        decomp = hermitian_eigendecompose(np.eye(3))
        np.testing.assert_allclose(decomp.eigenvalues, [1.0, 1.0, 1.0], atol=1e-14)

    def test_vacuum_rabi_doublet(self):
        decomp = hermitian_eigendecompose(h_model(1.0, 0.0))
        np.testing.assert_allclose(decomp.eigenvalues, [-1.0, 0.0, 1.0], atol=1e-14)

    def test_split_doublet(self):
        decomp = hermitian_eigendecompose(h_model(1.0, 0.5))
        np.testing.assert_allclose(decomp.eigenvalues, [-OMEGA, 0.0, OMEGA], atol=1e-12)

    def test_contract_on_random_matrices(self):
        # residual and orthonormality bounds on 10^3 random 3x3 and 4x4
        rng = np.random.default_rng(11)
        for k in range(1000):
            m = random_hermitian(rng, 3 + (k % 2))
            decomp = hermitian_eigendecompose(m)
            n = m.shape[0]
            scale = np.max(np.abs(m))
            recon = (decomp.eigenvectors * decomp.eigenvalues) @ decomp.eigenvectors.conj().T
            assert np.max(np.abs(m - recon)) <= 1e-12 * scale
            gram = decomp.eigenvectors.conj().T @ decomp.eigenvectors
            assert np.max(np.abs(gram - np.eye(n))) <= 1e-12
            assert np.all(np.diff(decomp.eigenvalues) >= 0.0)

    def test_deterministic(self):
        m = random_hermitian(np.random.default_rng(5), 4)
        a = hermitian_eigendecompose(m)
        b = hermitian_eigendecompose(m)
        assert np.array_equal(a.eigenvalues, b.eigenvalues)
        assert np.array_equal(a.eigenvectors, b.eigenvectors)

    def test_rejects_non_hermitian(self):
        m = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
        assert hermiticity_defect(m) == 1.0
        with pytest.raises(NonHermitianInput):
            hermitian_eigendecompose(m)

    def test_rejects_non_square_and_oversized(self):
        with pytest.raises(DimensionMismatch):
            hermitian_eigendecompose(np.zeros((2, 3)))
        with pytest.raises(DimensionMismatch):
            hermitian_eigendecompose(np.eye(65))

    def test_results_read_only(self):
        decomp = hermitian_eigendecompose(h_model(1.0, 0.5))
        with pytest.raises(ValueError):
            decomp.eigenvalues[0] = 0.0


class TestEvolveSpectral:
    def test_time_zero_is_identity(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            m = random_hermitian(rng, 3)
            psi0 = random_state(rng, 3)
            out = evolve_spectral(hermitian_eigendecompose(m), psi0, 0.0)
            assert np.max(np.abs(out - psi0)) <= 1e-14

    def test_closed_form_amplitudes_at_peak_time(self):
        decomp = hermitian_eigendecompose(h_model(1.0, 0.5))
        out = evolve_spectral(decomp, np.array([1.0, 0.0, 0.0]), T_PEAK)
        expected = np.array([-0.2, -0.7745966692414834j, -0.6])
        assert np.max(np.abs(out - expected)) <= 1e-12

    def test_zero_mode_is_stationary(self):
        decomp = hermitian_eigendecompose(h_model(1.0, 0.5))
        dark = np.array([0.5, 0.0, -1.0]) / OMEGA
        for t in (0.0, 1.7, 40.0):
            out = evolve_spectral(decomp, dark, t)
            assert np.max(np.abs(out - dark)) <= 1e-12

    def test_norm_conservation(self):
        rng = np.random.default_rng(3)
        decomp = hermitian_eigendecompose(random_hermitian(rng, 4))
        psi0 = random_state(rng, 4)
        out = evolve_spectral(decomp, psi0, rng.uniform(0.0, 100.0, size=200))
        assert np.max(np.abs(np.linalg.norm(out, axis=1) - 1.0)) <= 1e-12

    def test_group_property(self):
        rng = np.random.default_rng(4)
        for _ in range(30):
            decomp = hermitian_eigendecompose(random_hermitian(rng, 3))
            psi0 = random_state(rng, 3)
            t1, t2 = rng.uniform(0.0, 10.0, size=2)
            direct = evolve_spectral(decomp, psi0, t1 + t2)
            chained = evolve_spectral(decomp, evolve_spectral(decomp, psi0, t1), t2)
            assert np.max(np.abs(direct - chained)) <= 1e-11

    def test_time_array_matches_scalar_calls(self):
        decomp = hermitian_eigendecompose(h_model(0.7, 0.2))
        psi0 = np.array([0.6, 0.8j, 0.0])
        grid = np.array([0.0, 0.5, 2.5])
        batch = evolve_spectral(decomp, psi0, grid)
        for row, t in zip(batch, grid):
            assert np.max(np.abs(row - evolve_spectral(decomp, psi0, t))) <= 1e-15

    def test_input_validation(self):
        decomp = hermitian_eigendecompose(h_model(1.0, 0.5))
        with pytest.raises(UnnormalizedState):
            evolve_spectral(decomp, np.array([1.0, 1.0, 0.0]), 1.0)
        with pytest.raises(DimensionMismatch):
            evolve_spectral(decomp, np.array([1.0, 0.0]), 1.0)


class TestRk4:
    def test_zero_horizon_returns_initial_state(self):
        psi0 = np.array([1.0, 0.0, 0.0], dtype=complex)
        out = rk4_schrodinger(h_model(1.0, 0.5), psi0, 0.0, 1e-3)
        assert np.array_equal(out, psi0)

    def test_zero_hamiltonian_is_static(self):
        psi0 = np.array([0.6, 0.8, 0.0], dtype=complex)
        out = rk4_schrodinger(np.zeros((3, 3)), psi0, 5.0, 1e-2)
        assert np.max(np.abs(out - psi0)) <= 1e-14

    def test_matches_spectral_route(self):
        # dt = 1e-3/Omega over t in [0, 10/Omega], entrywise 1e-8
        rng = np.random.default_rng(6)
        for _ in range(5):
            g1, rddi = rng.uniform(0.1, 1.0, size=2)
            h = h_model(g1, rddi)
            omega = math.hypot(g1, rddi)
            psi0 = np.array([1.0, 0.0, 0.0], dtype=complex)
            t_final = 10.0 / omega
            approx = rk4_schrodinger(h, psi0, t_final, 1e-3 / omega)
            exact = evolve_spectral(hermitian_eigendecompose(h), psi0, t_final)
            assert np.max(np.abs(approx - exact)) <= 1e-8

    def test_peak_time_agreement(self):
        h = h_model(1.0, 0.5)
        psi0 = np.array([1.0, 0.0, 0.0], dtype=complex)
        approx = rk4_schrodinger(h, psi0, T_PEAK, 1e-3)
        exact = evolve_spectral(hermitian_eigendecompose(h), psi0, T_PEAK)
        assert np.max(np.abs(approx - exact)) <= 1e-8

    def test_partial_final_step(self):
        h = h_model(1.0, 0.0)
        psi0 = np.array([1.0, 0.0, 0.0], dtype=complex)
        # 0.1234 is not a multiple of dt; remainder step must land exactly
        approx = rk4_schrodinger(h, psi0, 0.1234, 1e-2)
        exact = evolve_spectral(hermitian_eigendecompose(h), psi0, 0.1234)
        assert np.max(np.abs(approx - exact)) <= 1e-10

    def test_invalid_steps(self):
        h = h_model(1.0, 0.5)
        psi0 = np.array([1.0, 0.0, 0.0], dtype=complex)
        with pytest.raises(InvalidStep):
            rk4_schrodinger(h, psi0, 1.0, 0.0)
        with pytest.raises(InvalidStep):
            rk4_schrodinger(h, psi0, 1.0, -1e-3)
        with pytest.raises(InvalidStep):
            rk4_schrodinger(h, psi0, 1.0, 2.0)
        with pytest.raises(InvalidStep):
            rk4_schrodinger(h, psi0, -1.0, 1e-3)

    def test_norm_drift_is_tiny_but_nonzero_diagnostic(self):
        h = h_model(1.0, 0.5)
        psi0 = np.array([1.0, 0.0, 0.0], dtype=complex)
        out = rk4_schrodinger(h, psi0, 10.0, 1e-3)
        assert abs(np.linalg.norm(out) - 1.0) <= 1e-10
