import math

import numpy as np
import pytest

from cavitypair import (
    DegenerateModel,
    DivisionByZeroCoupling,
    ModelParams,
    analytic_spectrum,
    build_effective_h,
    build_single_excitation_h,
    evolve_spectral,
    hermitian_eigendecompose,
)

SQRT_HALF = 0.7071067811865476


class TestModelParams:
    def test_defaults(self):
        p = ModelParams(g1=1.0)
        assert p.g2 == 0.0 and p.rddi == 0.0
        assert p.omega == 1.0

    def test_omega(self):
        assert ModelParams(g1=1.0, rddi=0.5).omega == pytest.approx(1.118033988749895, abs=1e-15)

    def test_rejects_bad_values(self):
        for bad in ({"g1": -0.1}, {"g1": 1.0, "g2": -1.0}, {"g1": float("nan")},
                    {"g1": 1.0, "rddi": float("inf")}):
            with pytest.raises(ValueError):
                ModelParams(**bad)


class TestBuildH:
    def test_matrix_layout(self):
        h = build_single_excitation_h(ModelParams(g1=1.0, g2=0.0, rddi=0.5))
        np.testing.assert_array_equal(h, np.array(
            [[0.0, 1.0, 0.0], [1.0, 0.0, 0.5], [0.0, 0.5, 0.0]], dtype=complex))

    def test_zero_params_zero_matrix(self):
        np.testing.assert_array_equal(
            build_single_excitation_h(ModelParams(g1=0.0)), np.zeros((3, 3), dtype=complex))

    def test_tiny_g2_barely_moves_spectrum(self):
        base = hermitian_eigendecompose(
            build_single_excitation_h(ModelParams(g1=1.0, rddi=0.01))).eigenvalues
        shifted = hermitian_eigendecompose(
            build_single_excitation_h(ModelParams(g1=1.0, g2=1e-10, rddi=0.01))).eigenvalues
        assert np.max(np.abs(shifted - base)) <= 1e-9 * np.max(np.abs(base))


class TestAnalyticSpectrum:
    def test_atom2_decoupled_limit(self):
        s = analytic_spectrum(ModelParams(g1=1.0))
        assert s.omega == 1.0
        np.testing.assert_allclose(s.dark, [0.0, 0.0, 1.0], atol=1e-15)
        np.testing.assert_allclose(s.bright_plus, [SQRT_HALF, SQRT_HALF, 0.0], atol=1e-15)
        np.testing.assert_allclose(s.bright_minus, [SQRT_HALF, -SQRT_HALF, 0.0], atol=1e-15)
        assert s.ratio_gamma == math.inf

    def test_split_case(self):
        s = analytic_spectrum(ModelParams(g1=1.0, rddi=0.5))
        assert s.omega == pytest.approx(1.118033988749895, abs=1e-15)
        np.testing.assert_allclose(
            s.dark, [0.4472135954999579, 0.0, -0.8944271909999159], atol=1e-15)
        assert s.ratio_gamma == pytest.approx(2.0, abs=1e-15)

    def test_exchange_limit(self):
        s = analytic_spectrum(ModelParams(g1=0.0, rddi=1.0))
        assert s.omega == 1.0
        np.testing.assert_allclose(s.dark, [1.0, 0.0, 0.0], atol=1e-15)

    def test_rejects_nonzero_g2(self):
        with pytest.raises(ValueError):
            analytic_spectrum(ModelParams(g1=1.0, g2=0.1, rddi=0.5))

    def test_degenerate(self):
        with pytest.raises(DegenerateModel):
            analytic_spectrum(ModelParams(g1=0.0))

    def test_matches_numeric_solver(self):
        # eigenvalues to 1e-12, eigenvector projectors to 1e-10, 10^3 draws
        rng = np.random.default_rng(21)
        for _ in range(1000):
            g1, rddi = rng.uniform(0.0, 1.0, size=2)
            if max(g1, rddi) == 0.0:
                continue
            params = ModelParams(g1=g1, rddi=rddi)
            s = analytic_spectrum(params)
            h = build_single_excitation_h(params)
            decomp = hermitian_eigendecompose(h)
            np.testing.assert_allclose(
                decomp.eigenvalues, [-s.omega, 0.0, s.omega], atol=1e-12)
            for i, vec in enumerate((s.bright_minus, s.dark, s.bright_plus)):
                numeric = decomp.eigenvectors[:, i]
                diff = np.outer(vec, vec.conj()) - np.outer(numeric, numeric.conj())
                assert np.max(np.abs(diff)) <= 1e-10

    def test_dark_state_annihilated(self):
        rng = np.random.default_rng(22)
        for _ in range(200):
            g1, rddi = rng.uniform(0.0, 1.0, size=2)
            if max(g1, rddi) == 0.0:
                continue
            params = ModelParams(g1=g1, rddi=rddi)
            h = build_single_excitation_h(params)
            s = analytic_spectrum(params)
            assert np.linalg.norm(h @ s.dark) <= 1e-12 * max(g1, rddi)

    def test_triple_orthonormal(self):
        s = analytic_spectrum(ModelParams(g1=0.8, rddi=0.33))
        basis = np.column_stack([s.bright_minus, s.dark, s.bright_plus])
        assert np.max(np.abs(basis.T @ basis - np.eye(3))) <= 1e-12


class TestSpectrumSymmetry:
    """Eigenvalues come in +/- pairs around the zero mode.

    This holds exactly for g2 = 0 (any Gamma) and for Gamma = 0 (any g2),
    and survives to 1e-12 for the e^-25-suppressed g2 the default geometry
    produces.  It is not a property of arbitrary (g1, g2, Gamma): the trace
    is zero but the symmetric triple splits once all three couplings are
    comparable.
    """

    def test_symmetric_without_g2(self):
        rng = np.random.default_rng(23)
        for _ in range(200):
            g1, rddi = rng.uniform(0.01, 1.0, size=2)
            e = hermitian_eigendecompose(
                build_single_excitation_h(ModelParams(g1=g1, rddi=rddi))).eigenvalues
            assert abs(e[0] + e[2]) <= 1e-12 and abs(e[1]) <= 1e-12

    def test_symmetric_without_rddi(self):
        rng = np.random.default_rng(24)
        for _ in range(200):
            g1, g2 = rng.uniform(0.01, 1.0, size=2)
            e = hermitian_eigendecompose(
                build_single_excitation_h(ModelParams(g1=g1, g2=g2))).eigenvalues
            assert abs(e[0] + e[2]) <= 1e-12 and abs(e[1]) <= 1e-12

    def test_symmetric_at_suppressed_g2(self):
        e = hermitian_eigendecompose(build_single_excitation_h(
            ModelParams(g1=0.018315638888734179, g2=1.3887943864964021e-11,
                        rddi=2.5e-4))).eigenvalues
        assert abs(e[0] + e[2]) <= 1e-12


class TestEffectiveH:
    def test_chi_zero_case(self):
        h = build_effective_h(ModelParams(g1=1.0))
        np.testing.assert_array_equal(h, np.array(
            [[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]], dtype=complex))

    def test_chi_value(self):
        h = build_effective_h(ModelParams(g1=1.0, rddi=0.1))
        chi = 0.028284271247461905
        assert h[1, 1] == pytest.approx(chi, abs=1e-15)
        assert h[2, 2] == pytest.approx(-chi, abs=1e-15)
        assert h[0, 2] == 0.0 and h[1, 2] == 0.0

    def test_never_populates_atom2(self):
        params = ModelParams(g1=1.0, rddi=0.4)
        decomp = hermitian_eigendecompose(build_effective_h(params))
        psi0 = np.array([1.0, 0.0, 0.0], dtype=complex)
        out = evolve_spectral(decomp, psi0, np.linspace(0.0, 50.0, 501))
        assert np.max(np.abs(out[:, 2])) <= 1e-12

    def test_rejects_zero_g1(self):
        with pytest.raises(DivisionByZeroCoupling):
            build_effective_h(ModelParams(g1=0.0, rddi=0.5))
