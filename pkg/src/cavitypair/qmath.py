"""Small dense complex linear algebra for the single-excitation problem.

Provides the Hermitian eigendecomposition used throughout the package, the
spectral propagator psi(t) = sum_i exp(-i E_i t) <phi_i|psi0> |phi_i>, and a
fixed-step Runge-Kutta integrator that serves as an independent cross-check of
the spectral route.  hbar = 1 everywhere; frequencies are dimensionless
(units of the maximum coupling g0) and times carry units 1/g0.

All operations are pure functions of immutable inputs and are safe to call
from parallel workers.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidStep,
    NoConvergence,
    NonHermitianInput,
    UnnormalizedState,
)

# Structural tolerances for double precision at dimension <= 4.
HERMITICITY_RTOL = 1e-12
RESIDUAL_RTOL = 1e-12
ORTHONORMALITY_TOL = 1e-12
NORM_TOL = 1e-10

MAX_DIM = 64


@dataclass(frozen=True)
class SpectralDecomposition:
    """Real eigenvalues (ascending) with orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]


def hermiticity_defect(m: np.ndarray) -> float:
    """Return max |m[i,j] - conj(m[j,i])|, the distance from Hermiticity."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def _require_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    return m


def _require_hermitian(m: np.ndarray) -> np.ndarray:
    m = _require_square(m)
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    defect = hermiticity_defect(m)
    if defect > HERMITICITY_RTOL * scale:
        raise NonHermitianInput(
            f"Hermiticity defect {defect:.3e} exceeds {HERMITICITY_RTOL:.0e} * {scale:.3e}"
        )
    return m


def _require_normalized(psi: np.ndarray, dim: int | None = None) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1:
        raise DimensionMismatch(f"expected a 1-d state vector, got shape {psi.shape}")
    if dim is not None and psi.shape[0] != dim:
        raise DimensionMismatch(f"state has dimension {psi.shape[0]}, expected {dim}")
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > NORM_TOL:
        raise UnnormalizedState(f"|psi| = {norm!r} deviates from 1 beyond {NORM_TOL:.0e}")
    return psi


def hermitian_eigendecompose(m: np.ndarray) -> SpectralDecomposition:
    """Eigendecompose a small Hermitian matrix.

    Parameters
    ----------
    m : (n, n) array_like
        Hermitian matrix, n <= 64.  Hermiticity is checked against
        max|m - m^dagger| <= 1e-12 * max|m|.

    Returns
    -------
    SpectralDecomposition
        Eigenvalues ascending; eigenvector columns orthonormal.  The
        reconstruction residual ||m - V diag(E) V^dagger||_max is verified
        against 1e-12 * max|m| before returning.

    Raises
    ------
    NonHermitianInput
        If the Hermiticity tolerance is exceeded.
    NoConvergence
        If the backend fails or the residual/orthonormality bound is violated.
    """
    m = _require_hermitian(m)
    n = m.shape[0]
    if n > MAX_DIM:
        raise DimensionMismatch(f"dimension {n} exceeds supported maximum {MAX_DIM}")
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"eigensolver failed: {exc}") from exc

    scale = float(np.max(np.abs(m))) if n else 0.0
    residual = float(
        np.max(np.abs(m - (eigenvectors * eigenvalues) @ eigenvectors.conj().T))
    )
    if residual > RESIDUAL_RTOL * max(scale, 1e-300):
        raise NoConvergence(
            f"reconstruction residual {residual:.3e} exceeds {RESIDUAL_RTOL:.0e} * {scale:.3e}"
        )
    ortho = float(np.max(np.abs(eigenvectors.conj().T @ eigenvectors - np.eye(n))))
    if ortho > ORTHONORMALITY_TOL:
        raise NoConvergence(f"eigenvector orthonormality defect {ortho:.3e}")

    eigenvalues = np.real(eigenvalues)
    eigenvalues.setflags(write=False)
    eigenvectors.setflags(write=False)
    return SpectralDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def evolve_spectral(decomp: SpectralDecomposition, psi0: np.ndarray, t) -> np.ndarray:
    """Propagate psi0 through the spectral representation of a Hamiltonian.

    Parameters
    ----------
    decomp : SpectralDecomposition
        Decomposition of the (Hermitian) generator.
    psi0 : (n,) array_like
        Normalized initial state (tolerance 1e-10).
    t : float or (nt,) array_like
        Time(s), units 1/g0.

    Returns
    -------
    np.ndarray
        psi(t) with shape (n,) for scalar t, else (nt, n).  The norm is
        conserved to 1e-12 for any t.
    """
    psi0 = _require_normalized(psi0, decomp.dim)
    coeff = decomp.eigenvectors.conj().T @ psi0
    t_arr = np.asarray(t, dtype=float)
    phases = np.exp(-1j * np.multiply.outer(np.atleast_1d(t_arr), decomp.eigenvalues))
    out = (phases * coeff) @ decomp.eigenvectors.T
    return out[0] if t_arr.ndim == 0 else out


def rk4_schrodinger(h: np.ndarray, psi0: np.ndarray, t_final: float, dt: float) -> np.ndarray:
    """Integrate d psi/dt = -i H psi with the classic fixed-step RK4 scheme.

    Independent of the spectral route; no renormalization is applied, so the
    norm drift is a usable accuracy diagnostic.  The final step is shortened
    when t_final is not an integer multiple of dt.

    Raises InvalidStep for dt <= 0, t_final < 0, or dt > t_final > 0.
    """
    h = _require_hermitian(h)
    if dt <= 0.0:
        raise InvalidStep(f"dt = {dt!r} must be positive")
    if t_final < 0.0:
        raise InvalidStep(f"t_final = {t_final!r} must be non-negative")
    if t_final > 0.0 and dt > t_final:
        raise InvalidStep(f"dt = {dt!r} exceeds t_final = {t_final!r}")
    psi = _require_normalized(psi0, h.shape[0])
    if t_final == 0.0:
        return psi.copy()

    gen = -1j * h
    n_full = int(np.floor(t_final / dt + 1e-12))
    remainder = t_final - n_full * dt

    def step(psi, s):
        k1 = gen @ psi
        k2 = gen @ (psi + (0.5 * s) * k1)
        k3 = gen @ (psi + (0.5 * s) * k2)
        k4 = gen @ (psi + s * k3)
        return psi + (s / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)

    for _ in range(n_full):
        psi = step(psi, dt)
    if remainder > 1e-12 * dt:
        psi = step(psi, remainder)
    return psi
