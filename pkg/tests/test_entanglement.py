import numpy as np
import pytest

from cavitypair import (
    InitialState,
    InvalidDensityMatrix,
    ModelParams,
    PatternMismatch,
    evolve,
    reduced_density,
    wootters_concurrence,
    xstate_concurrence,
)

PEAK_STATE = np.array([-0.2, -0.7745966692414834j, -0.6])
PEAK_CONCURRENCE = 0.9295160030897797  # 2 * 0.6 * 0.7745966692414834


def single_coherence_rho(populations, coherence):
    rho = np.diag(np.asarray(populations, dtype=complex))
    rho[1, 2] = coherence
    rho[2, 1] = np.conj(coherence)
    return rho


def random_unitary(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


class TestWootters:
    def test_bell_state(self):
        rho = single_coherence_rho([0.0, 0.5, 0.5, 0.0], 0.5)
        assert wootters_concurrence(rho) == pytest.approx(1.0, abs=1e-12)

    def test_product_state(self):
        rho = np.zeros((4, 4), dtype=complex)
        rho[1, 1] = 1.0
        assert wootters_concurrence(rho) == pytest.approx(0.0, abs=1e-12)

    def test_peak_state_density(self):
        rho = reduced_density(PEAK_STATE)
        assert wootters_concurrence(rho) == pytest.approx(PEAK_CONCURRENCE, abs=1e-10)

    def test_range_clamped(self):
        rng = np.random.default_rng(31)
        for _ in range(100):
            a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            rho = a @ a.conj().T
            rho /= np.real(np.trace(rho))
            assert 0.0 <= wootters_concurrence(rho) <= 1.0

    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(32)
        for _ in range(50):
            a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            rho = a @ a.conj().T
            rho /= np.real(np.trace(rho))
            u = np.kron(random_unitary(rng, 2), random_unitary(rng, 2))
            rotated = u @ rho @ u.conj().T
            assert abs(wootters_concurrence(rotated) - wootters_concurrence(rho)) <= 1e-10

    def test_pure_state_identity(self):
        # for |psi> = (a,b,c,d) the concurrence is 2|ad - bc|
        rng = np.random.default_rng(33)
        for _ in range(100):
            psi = rng.normal(size=4) + 1j * rng.normal(size=4)
            psi /= np.linalg.norm(psi)
            rho = np.outer(psi, psi.conj())
            expected = 2.0 * abs(psi[0] * psi[3] - psi[1] * psi[2])
            assert wootters_concurrence(rho) == pytest.approx(expected, abs=1e-10)

    def test_rejects_non_hermitian(self):
        rho = np.eye(4, dtype=complex) / 4.0
        rho[0, 1] = 0.3
        with pytest.raises(InvalidDensityMatrix):
            wootters_concurrence(rho)

    def test_rejects_bad_trace(self):
        with pytest.raises(InvalidDensityMatrix):
            wootters_concurrence(np.eye(4, dtype=complex))

    def test_rejects_indefinite_matrix(self):
        rho = np.diag([0.7, 0.5, -0.1, -0.1]).astype(complex)
        with pytest.raises(InvalidDensityMatrix):
            wootters_concurrence(rho)

    def test_rejects_wrong_shape(self):
        with pytest.raises(InvalidDensityMatrix):
            wootters_concurrence(np.eye(3, dtype=complex) / 3.0)


class TestXstate:
    def test_bell_like(self):
        rho = single_coherence_rho([0.0, 0.5, 0.5, 0.0], 0.5)
        assert xstate_concurrence(rho) == pytest.approx(1.0, abs=1e-15)

    def test_peak_state(self):
        rho = reduced_density(PEAK_STATE)
        assert xstate_concurrence(rho) == pytest.approx(PEAK_CONCURRENCE, abs=1e-12)

    def test_no_coherence(self):
        rho = np.zeros((4, 4), dtype=complex)
        rho[3, 3] = 1.0
        assert xstate_concurrence(rho) == 0.0

    def test_rejects_off_pattern(self):
        rho = single_coherence_rho([0.1, 0.4, 0.4, 0.1], 0.3)
        rho[0, 1] = 1e-6
        rho[1, 0] = 1e-6
        with pytest.raises(PatternMismatch):
            xstate_concurrence(rho)

    def test_rejects_dominant_outer_populations(self):
        rho = single_coherence_rho([0.5, 0.2, 0.2, 0.1], 0.01)
        with pytest.raises(PatternMismatch):
            xstate_concurrence(rho)

    def test_rejects_indefinite_coherence_block(self):
        rho = single_coherence_rho([0.3, 0.2, 0.2, 0.3], 0.25)
        with pytest.raises(InvalidDensityMatrix):
            xstate_concurrence(rho)


class TestFastPathAgreement:
    def test_on_pipeline_states(self):
        rng = np.random.default_rng(34)
        worst = 0.0
        for _ in range(300):
            g1, rddi = rng.uniform(0.05, 1.0, size=2)
            t = rng.uniform(0.0, 30.0)
            psi = evolve(ModelParams(g1=g1, rddi=rddi), InitialState(), t)
            rho = reduced_density(psi)
            worst = max(worst, abs(wootters_concurrence(rho) - xstate_concurrence(rho)))
        assert worst <= 1e-10

    def test_with_general_initial_state(self):
        rng = np.random.default_rng(35)
        for _ in range(100):
            g1, rddi = rng.uniform(0.05, 1.0, size=2)
            angle = rng.uniform(0.0, 2.0 * np.pi)
            init = InitialState(alpha=np.cos(angle), beta=1j * np.sin(angle))
            psi = evolve(ModelParams(g1=g1, rddi=rddi), init, rng.uniform(0.0, 10.0))
            rho = reduced_density(psi)
            assert abs(wootters_concurrence(rho) - xstate_concurrence(rho)) <= 1e-10
