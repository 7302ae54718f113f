"""Single-excitation Hamiltonians for two atoms sharing one cavity photon.

The conserved three-dimensional subspace is spanned, in this fixed order, by

    |g,g,1>   both atoms ground, one photon in the cavity,
    |e,g,0>   atom 1 excited,
    |g,e,0>   atom 2 excited.

Couplings: g1 and g2 are the atom-cavity exchange strengths, ``rddi`` is the
direct atom-atom excitation exchange Gamma.  Everything is expressed in units
of the maximum coupling g0.  In the maximally asymmetric regime g2/g1 -> 0
the spectrum has the closed form E = {0, +/- Omega} with
Omega = sqrt(g1^2 + Gamma^2); the zero mode carries no atom-1 excitation and
is stationary (a dark state).
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateModel, DivisionByZeroCoupling
from .qmath import SpectralDecomposition  # noqa: F401  (re-exported alongside builders)


@dataclass(frozen=True)
class ModelParams:
    """Coupling frequencies defining the single-excitation Hamiltonian (g0 units)."""

    g1: float
    g2: float = 0.0
    rddi: float = 0.0

    def __post_init__(self):
        for name in ("g1", "g2", "rddi"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} = {value!r} is not finite")
            if value < 0.0:
                raise ValueError(f"{name} = {value!r} must be non-negative")

    @property
    def omega(self) -> float:
        """Effective oscillation frequency sqrt(g1^2 + rddi^2) of the g2=0 model."""
        return math.hypot(self.g1, self.rddi)


@dataclass(frozen=True)
class AnalyticSpectrum:
    """Closed-form spectrum of the g2 = 0 Hamiltonian.

    ``dark`` is the zero-eigenvalue eigenvector (Gamma, 0, -g1)/Omega with the
    first non-zero component taken positive; ``bright_plus``/``bright_minus``
    are (g1, +/-Omega, Gamma)/(sqrt(2) Omega) with eigenvalues +/-Omega.
    ``ratio_gamma`` is g1/Gamma (inf when Gamma = 0).
    """

    omega: float
    dark: np.ndarray
    bright_plus: np.ndarray
    bright_minus: np.ndarray
    ratio_gamma: float


def build_single_excitation_h(params: ModelParams) -> np.ndarray:
    """Return the 3x3 Hamiltonian on the ordered basis (|g,g,1>, |e,g,0>, |g,e,0>).

    [[0,  g1, g2 ],
     [g1, 0,  Gamma],
     [g2, Gamma, 0 ]]
    """
    g1, g2, gamma = params.g1, params.g2, params.rddi
    return np.array(
        [[0.0, g1, g2], [g1, 0.0, gamma], [g2, gamma, 0.0]],
        dtype=complex,
    )


def analytic_spectrum(params: ModelParams) -> AnalyticSpectrum:
    """Closed-form eigensystem for the g2 = 0 Hamiltonian.

    Requires params.g2 == 0 and Omega > 0 (raises DegenerateModel when both
    couplings vanish).  Satisfies H dark = 0 and H bright_pm = +/-Omega
    bright_pm to machine precision; cross-checked against the numerical
    eigensolver by the test suite.
    """
    if params.g2 != 0.0:
        raise ValueError("analytic spectrum is defined for g2 = 0 only")
    g1, gamma = params.g1, params.rddi
    omega = params.omega
    if omega == 0.0:
        raise DegenerateModel("g1 = rddi = 0: no bright doublet, period undefined")

    dark = np.array([gamma, 0.0, -g1]) / omega
    # Sign convention: first non-zero component positive.
    first = dark[np.nonzero(dark)[0][0]]
    if first < 0.0:
        dark = -dark
    root2 = math.sqrt(2.0)
    bright_plus = np.array([g1, omega, gamma]) / (root2 * omega)
    bright_minus = np.array([g1, -omega, gamma]) / (root2 * omega)
    ratio_gamma = g1 / gamma if gamma > 0.0 else math.inf
    for vec in (dark, bright_plus, bright_minus):
        vec.setflags(write=False)
    return AnalyticSpectrum(
        omega=omega,
        dark=dark,
        bright_plus=bright_plus,
        bright_minus=bright_minus,
        ratio_gamma=ratio_gamma,
    )


def build_effective_h(params: ModelParams) -> np.ndarray:
    """Adiabatic strong-coupling Hamiltonian for the fast-oscillating regime.

    The atom-atom exchange is replaced by the diagonal shift
    chi = 2 sqrt(2) Gamma^2 / g1, leaving |g,e,0> decoupled:

    [[0,  g1, 0 ],
     [g1, chi, 0],
     [0,  0, -chi]]

    Starting from (1, 0, 0) the atom-2 amplitude therefore stays zero for all
    times and no entanglement is ever generated.  Raises
    DivisionByZeroCoupling when g1 = 0.
    """
    if params.g1 == 0.0:
        raise DivisionByZeroCoupling("effective Hamiltonian requires g1 > 0")
    chi = 2.0 * math.sqrt(2.0) * params.rddi**2 / params.g1
    return np.array(
        [[0.0, params.g1, 0.0], [params.g1, chi, 0.0], [0.0, 0.0, -chi]],
        dtype=complex,
    )
