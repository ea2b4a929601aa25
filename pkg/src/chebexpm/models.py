"""The two benchmark Hamiltonians: a 2k-level Rosen-Zener model and the
Walker-Preston model of a diatomic molecule in a laser field."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .driver import SpectralBounds

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)


@dataclass(frozen=True)
class RosenZenerParams:
    k: int = 10
    V0: float = 2.0
    omega: float = 5.0
    T0: float = 1.0
    t0: float = -4.0
    tf: float = 4.0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not self.tf > self.t0:
            raise ValueError("need tf > t0")

    @property
    def d(self) -> int:
        return 2 * self.k


def rz_envelope(p: RosenZenerParams, t: float) -> tuple[float, float]:
    """``(f1(t), f2(t))``."""
    sech = 1.0 / math.cosh(t / p.T0)
    return p.V0 * math.cos(p.omega * t) * sech, -p.V0 * math.sin(p.omega * t) * sech


def rosen_zener_h(p: RosenZenerParams, t: float) -> np.ndarray:
    """``H(t) = f1 sigma1 (x) I + f2 sigma2 (x) R`` with ``R = tridiag(1, 0, 1)``."""
    f1, f2 = rz_envelope(p, t)
    R = np.eye(p.k, k=1) + np.eye(p.k, k=-1)
    return f1 * np.kron(SIGMA1, np.eye(p.k)) + f2 * np.kron(SIGMA2, R)


@dataclass(frozen=True)
class WalkerPrestonParams:
    x0: float = -0.8
    xN: float = 4.32
    N: int = 64
    mu: float = 1745.0
    D: float = 0.2251
    alpha_m: float = 1.1741
    A_las: float = 0.011025
    omega_las: float = 0.01787

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("N must be >= 2")
        if not self.xN > self.x0:
            raise ValueError("need xN > x0")

    @property
    def dx(self) -> float:
        return (self.xN - self.x0) / self.N

    @property
    def grid(self) -> np.ndarray:
        # u_i samples x_{i-1}, i = 1..N
        return self.x0 + self.dx * np.arange(self.N)

    @property
    def t0(self) -> float:
        return 0.0

    @property
    def tf(self) -> float:
        return 2 * math.pi / self.omega_las

    @property
    def kinetic_prefactor(self) -> float:
        return self.N**2 / (2 * self.mu * (self.xN - self.x0) ** 2)

    @property
    def kinetic_max(self) -> float:
        """Upper bound of the spectrum of ``T`` (four times the prefactor)."""
        return 2 * self.N**2 / (self.mu * (self.xN - self.x0) ** 2)


def morse(p: WalkerPrestonParams, x) -> np.ndarray:
    return p.D * (1 - np.exp(-p.alpha_m * np.asarray(x))) ** 2


def kinetic_matrix(p: WalkerPrestonParams) -> np.ndarray:
    """Second-order central differences; the corner entries are +1 as printed
    for the model (an antiperiodic closure: spectrum inside [0, kinetic_max])."""
    n = p.N
    T = 2 * np.eye(n) - np.eye(n, k=1) - np.eye(n, k=-1)
    T[0, -1] += 1
    T[-1, 0] += 1
    return p.kinetic_prefactor * T


def potential_diagonal(p: WalkerPrestonParams, t: float) -> np.ndarray:
    x = p.grid
    return morse(p, x) + p.A_las * math.cos(p.omega_las * t) * x


def walker_preston_h(p: WalkerPrestonParams, t: float) -> tuple[np.ndarray, SpectralBounds]:
    """``H(t) = T + B(t)`` and the spectral bounds used for shifting."""
    b = potential_diagonal(p, t)
    H = kinetic_matrix(p) + np.diag(b)
    return H, SpectralBounds(float(b.min()), p.kinetic_max + float(b.max()))


def walker_preston_bounds(p: WalkerPrestonParams, weights, times) -> SpectralBounds:
    """Bounds for ``sum_i w_i H(t_i) = (sum w) T + diag(sum w_i B(t_i))``.

    Needs ``sum w >= 0`` (T is positive semidefinite); individual weights may
    be negative.
    """
    wsum = float(sum(weights))
    if wsum < 0:
        raise ValueError("weights must have a nonnegative sum")
    b = sum(w * potential_diagonal(p, t) for w, t in zip(weights, times))
    return SpectralBounds(float(b.min()), wsum * p.kinetic_max + float(b.max()))


def morse_ground_state(p: WalkerPrestonParams) -> np.ndarray:
    """Grid samples ``(dx)^{1/2} psi0(x_{i-1})`` of the Morse ground state, unit 2-norm."""
    omega0 = p.alpha_m * math.sqrt(2 * p.D / p.mu)
    gamma = 2 * p.D / omega0
    x = p.grid
    logpsi = -(gamma - 0.5) * p.alpha_m * x - gamma * np.exp(-p.alpha_m * x)
    u = math.sqrt(p.dx) * np.exp(logpsi - logpsi.max())
    return (u / np.linalg.norm(u)).astype(complex)
