"""Exponential integrators for ``U'(t) = -i H(t) U(t)``, ``U(t0) = I``.

Two one-step methods are provided: the exponential midpoint rule (order 2)
and the two-exponential commutator-free Magnus method with Gauss nodes
(order 4).  The matrix exponentials go through a pluggable backend:
``cheb`` (Chebyshev schemes; the cos/sin route for real symmetric H),
``pade`` (diagonal Pade baseline) or ``diag`` (eigendecomposition, uncounted).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .driver import SpectralBounds, cosm_sinm, expm_diag_oracle, expm_pade, expm_skew_hermitian
from .matcore import CostLedger, mat_mul

_R3 = math.sqrt(3.0)
CF4_C1 = 0.5 - _R3 / 6
CF4_C2 = 0.5 + _R3 / 6
CF4_A = 0.25 + _R3 / 6
CF4_B = 0.25 - _R3 / 6

BACKENDS = ("cheb", "pade", "diag")


class StepMethod(enum.Enum):
    MIDPOINT2 = "midpoint"
    CF4 = "cf4"

    @property
    def order(self) -> int:
        return 2 if self is StepMethod.MIDPOINT2 else 4


@dataclass(frozen=True)
class Propagator:
    """Problem data: ``hfun(t)`` and the interval split into ``M`` steps.

    ``bounds_fun(weights, times)``, if given, returns spectral bounds of
    ``sum_i w_i hfun(t_i)``; the Chebyshev backend then shifts the spectrum.
    ``symmetric`` marks real symmetric ``H`` (cos/sin route).
    """

    hfun: Callable[[float], np.ndarray]
    t0: float
    tf: float
    M: int
    bounds_fun: Callable | None = None
    symmetric: bool = False

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("M must be >= 1")
        if not self.tf > self.t0:
            raise ValueError("need tf > t0")

    @property
    def tau(self) -> float:
        return (self.tf - self.t0) / self.M


def _stages(method: StepMethod, t: float, tau: float):
    """(weights, times) of each exponent, in order of application."""
    if method is StepMethod.MIDPOINT2:
        return [((1.0,), (t + tau / 2,))]
    t1, t2 = t + CF4_C1 * tau, t + CF4_C2 * tau
    return [((CF4_A, CF4_B), (t1, t2)), ((CF4_B, CF4_A), (t1, t2))]


def exp_minus_i(
    H: np.ndarray,
    tau: float,
    backend: str,
    ledger: CostLedger,
    bounds: SpectralBounds | None = None,
    symmetric: bool = False,
) -> np.ndarray:
    """``exp(-i tau H)`` through ``backend``; ``bounds`` refer to ``H`` (not ``tau H``)."""
    X = tau * H
    sb = None if bounds is None else SpectralBounds(tau * bounds.emin, tau * bounds.emax)
    if backend == "cheb":
        if symmetric:
            C, S = cosm_sinm(X, sb, ledger)
            return C - 1j * S
        return expm_skew_hermitian(X, sb, ledger)
    if backend == "pade":
        # the baseline runs as a plain expm: no spectral information
        return expm_pade(X, ledger)
    if backend == "diag":
        return expm_diag_oracle(X)
    raise ValueError(f"unknown backend {backend!r}; choose from {BACKENDS}")


def step(
    method: StepMethod,
    hfun: Callable[[float], np.ndarray],
    t: float,
    tau: float,
    backend: str,
    ledger: CostLedger,
    bounds_fun: Callable | None = None,
    symmetric: bool = False,
) -> np.ndarray:
    """One-step propagator from ``t`` to ``t + tau``.

    The Magnus step charges one extra complex product for joining its two
    exponentials.
    """
    method = StepMethod(method)
    U = None
    for weights, times in _stages(method, t, tau):
        H = sum(w * hfun(ti) for w, ti in zip(weights, times))
        bounds = bounds_fun(weights, times) if bounds_fun is not None else None
        E = exp_minus_i(H, tau, backend, ledger, bounds, symmetric)
        U = E if U is None else mat_mul(E, U, ledger)
    return U


@dataclass
class PropagationResult:
    U: np.ndarray
    exp_cost: CostLedger
    accum_cost: CostLedger
    step_costs: list = field(default_factory=list, repr=False)

    @property
    def exp_products(self) -> Fraction:
        return self.exp_cost.total_cost

    @property
    def accum_products(self) -> Fraction:
        return self.accum_cost.total_cost

    @property
    def total_cost(self) -> Fraction:
        return self.exp_products + self.accum_products


def propagate(p: Propagator, method: StepMethod | str, backend: str) -> PropagationResult:
    """``U_M U_{M-1} ... U_1``; the ``M - 1`` accumulation products go to their own ledger."""
    method = StepMethod(method)
    exp_ledger, acc_ledger = CostLedger(), CostLedger()
    tau = p.tau
    U = None
    costs = []
    for n in range(p.M):
        t = p.t0 + n * tau
        before = exp_ledger.total_cost
        Un = step(method, p.hfun, t, tau, backend, exp_ledger, p.bounds_fun, p.symmetric)
        costs.append(exp_ledger.total_cost - before)
        U = Un if U is None else mat_mul(Un, U, acc_ledger)
    return PropagationResult(U, exp_ledger, acc_ledger, costs)


def reference_solution(
    hfun: Callable[[float], np.ndarray],
    t0: float,
    tf: float,
    M_ref: int = 2**11,
    tol: float = 1e-12,
    symmetric: bool = False,
) -> np.ndarray:
    """High-accuracy propagator: Magnus CF4 with the eigendecomposition backend
    and one Richardson step.

    CF4 is time-symmetric, so its global error expands in even powers of tau
    and ``(16 U(M) - U(M/2)) / 15`` removes the tau^4 term.  The result is
    checked against the same extrapolation at ``M/2``; disagreement above
    ``tol`` raises ``RuntimeError``.
    """
    if M_ref < 4 or M_ref & (M_ref - 1):
        raise ValueError("M_ref must be a power of two >= 4")

    def run(M):
        return propagate(Propagator(hfun, t0, tf, M, None, symmetric), StepMethod.CF4, "diag").U

    U4, U2, U1 = run(M_ref // 4), run(M_ref // 2), run(M_ref)
    R_half = (16 * U2 - U4) / 15
    R = (16 * U1 - U2) / 15
    diff = np.linalg.norm(R - R_half, 2)
    if diff > tol:
        raise RuntimeError(f"reference solution not converged: {diff:.3e} > {tol:g}")
    return R
