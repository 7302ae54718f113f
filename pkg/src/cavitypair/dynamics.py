"""Time evolution, reduction to the two-atom state, and peak analytics.

The initial state is |g>_2 (x) (alpha |g>_1|1> + beta |e>_1|0>), i.e.
(alpha, beta, 0) on the single-excitation basis.  Evolution goes through the
numerical eigendecomposition of the full Hamiltonian (g2 included), so the
pipeline stays valid outside the asymmetric limit; the closed forms below
hold for g2 = 0 and beta = 0, where with Omega = sqrt(g1^2 + Gamma^2)

    a(t) = Gamma^2/Omega^2 + (g1^2/Omega^2) cos(Omega t)
    b(t) = -i (g1/Omega) sin(Omega t)
    c(t) = (g1 Gamma/Omega^2) (cos(Omega t) - 1)

and the concurrence is C(t) = 2|b c| = (2 g1^2 Gamma/Omega^3)
|sin(Omega t)| (1 - cos(Omega t)), peaking at Omega t = 2pi/3 and 4pi/3 with
height (2 g1^2 Gamma/Omega^3)(3 sqrt(3)/4).  The peak height as a function of
the ratio Gamma/g1 is maximal (exactly 1) at Gamma = g1/sqrt(2).
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DegenerateModel, UnnormalizedState, ZeroCoupling
from .model import ModelParams, build_single_excitation_h
from .qmath import evolve_spectral, hermitian_eigendecompose

NORM_TOL = 1e-10

# Height of |sin(x)|(1 - cos(x)) at its maxima x = (3m +/- 1) pi/3.
_PEAK_SHAPE = 3.0 * math.sqrt(3.0) / 4.0


@dataclass(frozen=True)
class InitialState:
    """Weights of |g>_1|1> (alpha) and |e>_1|0> (beta); atom 2 starts in |g>."""

    alpha: complex = 1.0
    beta: complex = 0.0

    def __post_init__(self):
        for name in ("alpha", "beta"):
            if not cmath.isfinite(complex(getattr(self, name))):
                raise ValueError(f"{name} is not finite")
        norm_sq = abs(complex(self.alpha)) ** 2 + abs(complex(self.beta)) ** 2
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise UnnormalizedState(f"|alpha|^2 + |beta|^2 = {norm_sq!r} deviates from 1")

    def vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta, 0.0], dtype=complex)


@dataclass(frozen=True)
class TimeSeries:
    """Strictly ascending times (units 1/g0) with one finite value per time."""

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if times.ndim != 1 or values.shape != times.shape:
            raise ValueError("times and values must be 1-d arrays of equal length")
        if times.size == 0:
            raise ValueError("empty time grid")
        if times.size > 1 and not np.all(np.diff(times) > 0.0):
            raise ValueError("times must be strictly ascending")
        if not (np.all(np.isfinite(times)) and np.all(np.isfinite(values))):
            raise ValueError("times and values must be finite")
        times.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class PeakReport:
    """First-peak location/height and the repetition period of the concurrence."""

    t_peak: float
    c_peak: float
    period: float
    ratio: float


def evolve(params: ModelParams, init: InitialState, t) -> np.ndarray:
    """State at time(s) t under the full single-excitation Hamiltonian.

    Scalar t returns shape (3,), an array of times returns (nt, 3).
    """
    decomp = hermitian_eigendecompose(build_single_excitation_h(params))
    return evolve_spectral(decomp, init.vector(), t)


def reduced_density(psi: np.ndarray) -> np.ndarray:
    """Trace the cavity mode out of a pure single-excitation state.

    On the two-atom basis (|ee>, |eg>, |ge>, |gg>) the result carries
    populations (0, |b|^2, |c|^2, |a|^2) and the single coherence
    rho[eg, ge] = b conj(c); its magnitude squared equals the product of the
    two excited populations exactly, since the traced state is pure in each
    photon sector.
    """
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (3,):
        raise ValueError(f"expected a 3-component state, got shape {psi.shape}")
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > NORM_TOL:
        raise UnnormalizedState(f"|psi| = {norm!r} deviates from 1")
    a, b, c = psi
    rho = np.zeros((4, 4), dtype=complex)
    rho[1, 1] = abs(b) ** 2
    rho[2, 2] = abs(c) ** 2
    rho[3, 3] = abs(a) ** 2
    rho[1, 2] = b * np.conj(c)
    rho[2, 1] = np.conj(rho[1, 2])
    return rho


def concurrence_series(params: ModelParams, init: InitialState, t_grid) -> TimeSeries:
    """Concurrence of the reduced two-atom state along an ascending time grid.

    For the single-coherence states of this pipeline the Wootters formula
    reduces exactly to twice the |eg>-|ge> coherence magnitude, which is what
    is evaluated here (the general-formula equivalence is enforced by the
    test suite and the CLI selftest).
    """
    t_grid = np.asarray(t_grid, dtype=float)
    psi = evolve(params, init, t_grid)
    values = 2.0 * np.abs(psi[:, 1] * np.conj(psi[:, 2]))
    return TimeSeries(times=t_grid, values=values)


def closed_form_concurrence(g1: float, rddi: float, t):
    """Concurrence (2 g1^2 Gamma/Omega^3) |sin(Omega t)| (1 - cos(Omega t)).

    Closed form for the photon-fed initial state (alpha = 1, beta = 0) with
    g2 = 0.  Accepts scalar or array t.  Raises DegenerateModel when
    g1 = rddi = 0.
    """
    if g1 < 0.0 or rddi < 0.0:
        raise ValueError("couplings must be non-negative")
    omega = math.hypot(g1, rddi)
    if omega == 0.0:
        raise DegenerateModel("g1 = rddi = 0: Omega = 0")
    phase = omega * np.asarray(t, dtype=float)
    amplitude = 2.0 * g1**2 * rddi / omega**3
    out = amplitude * np.abs(np.sin(phase)) * (1.0 - np.cos(phase))
    return float(out) if out.ndim == 0 else out


def peak_times(g1: float, rddi: float, m_max: int = 1) -> np.ndarray:
    """Times (3m +/- 1) pi / (3 Omega) of the concurrence maxima, m = 1, 3, ... m_max."""
    if m_max < 1 or m_max % 2 == 0:
        raise ValueError(f"m_max = {m_max!r} must be an odd integer >= 1")
    omega = math.hypot(g1, rddi)
    if omega == 0.0:
        raise DegenerateModel("g1 = rddi = 0: Omega = 0")
    ms = np.arange(1, m_max + 1, 2, dtype=float)
    times = np.concatenate([(3.0 * ms - 1.0), (3.0 * ms + 1.0)]) * math.pi / (3.0 * omega)
    return np.sort(times)


def peak_report(params: ModelParams) -> PeakReport:
    """Closed-form peak height, first peak time, period and coupling ratio.

    Requires g2 = 0 and the photon-fed initial state.  Raises DegenerateModel
    when Omega = 0 and ZeroCoupling when g1 = 0 (the ratio Gamma/g1 would be
    undefined; no sentinel is substituted).
    """
    if params.g2 != 0.0:
        raise ValueError("peak analytics are defined for g2 = 0 only")
    omega = params.omega
    if omega == 0.0:
        raise DegenerateModel("g1 = rddi = 0: period undefined")
    if params.g1 == 0.0:
        raise ZeroCoupling("g1 = 0: ratio rddi/g1 undefined")
    c_peak = (2.0 * params.g1**2 * params.rddi / omega**3) * _PEAK_SHAPE
    return PeakReport(
        t_peak=2.0 * math.pi / (3.0 * omega),
        c_peak=c_peak,
        period=2.0 * math.pi / omega,
        ratio=params.rddi / params.g1,
    )


def peak_height(g1: float, rddi: float) -> float:
    """Peak concurrence (2 g1^2 Gamma/Omega^3)(3 sqrt(3)/4) as a function of Gamma."""
    omega = math.hypot(g1, rddi)
    if omega == 0.0:
        raise DegenerateModel("g1 = rddi = 0: Omega = 0")
    return (2.0 * g1**2 * rddi / omega**3) * _PEAK_SHAPE


def peak_optimum(g1: float) -> tuple[float, float]:
    """Exchange strength maximizing the peak concurrence, and that maximum.

    The optimum is Gamma = g1/sqrt(2) with peak concurrence exactly 1;
    ``scan_peak_optimum`` recovers the same point numerically.
    """
    if g1 <= 0.0:
        raise ValueError(f"g1 = {g1!r} must be positive")
    return g1 / math.sqrt(2.0), 1.0


def scan_peak_optimum(g1: float, lo: float | None = None, hi: float | None = None) -> tuple[float, float]:
    """Golden-section maximization of the peak concurrence over Gamma.

    Searches (0, 10 g1] by default.  Independent of ``peak_optimum``; used as
    its numerical cross-check (agreement to 1e-6 is asserted by the tests).
    """
    if g1 <= 0.0:
        raise ValueError(f"g1 = {g1!r} must be positive")
    lo = 1e-9 * g1 if lo is None else lo
    hi = 10.0 * g1 if hi is None else hi
    result = minimize_scalar(
        lambda r: -peak_height(g1, r),
        bracket=(lo, g1, hi),
        method="golden",
        options={"xtol": 1e-12},
    )
    return float(result.x), float(-result.fun)
