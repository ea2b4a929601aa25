"""Scheme selection, spectral shifting and scaling-and-squaring.

Three routes compute ``exp(-i A)`` for Hermitian ``A``:

* ``expm_skew_hermitian``: Chebyshev schemes + squaring (the main algorithm),
* ``expm_pade``: diagonal Pade baseline with the same scaling strategy,
* ``expm_diag_oracle``: eigendecomposition, uncounted, for reference.

``cosm_sinm`` computes ``(cos A, sin A)`` for real symmetric ``A`` with the
real cos/sin schemes and double-angle steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import polyeval
from .bounds import UNIT_ROUNDOFF
from .matcore import (
    INVERSE_COST,
    CostLedger,
    check_hermitian,
    check_symmetric,
    mat_mul,
    one_norm,
    solve_right,
)
from .polyeval import COSSIN_SCHEMES, EXP_SCHEMES, CosSinScheme, ExpScheme

MAX_SQUARINGS = 60


@dataclass(frozen=True)
class SpectralBounds:
    """Bounds ``emin <= lambda <= emax`` on the spectrum of a Hermitian matrix."""

    emin: float
    emax: float

    def __post_init__(self):
        if not (math.isfinite(self.emin) and math.isfinite(self.emax)):
            raise ValueError("spectral bounds must be finite")
        if self.emin > self.emax:
            raise ValueError(f"emin = {self.emin} exceeds emax = {self.emax}")


@dataclass(frozen=True)
class ShiftData:
    alpha: float
    beta: float
    shifted: bool


def shift_data(A: np.ndarray, bounds: SpectralBounds | None) -> ShiftData:
    """Centre and half-width of the spectrum; ``beta = ||A||_1`` when no bounds are given."""
    if bounds is None:
        return ShiftData(0.0, one_norm(A), False)
    alpha = 0.5 * (bounds.emax + bounds.emin)
    beta = 0.5 * (bounds.emax - bounds.emin)
    return ShiftData(alpha, beta, alpha != 0.0)


# -- Pade baseline -------------------------------------------------------------

# Forward-error radii for the diagonal approximants (m: theta, products).
# m = 4 costs as much as m = 5 and is never selected; it is kept for completeness.
PADE_THETA = {
    2: (2.4007e-3, 1),
    3: (2.715e-2, 2),
    4: (1.108e-1, 3),
    5: (2.803e-1, 3),
    7: (0.8983, 4),
    9: (1.833, 5),
    13: (4.316, 6),
}


@dataclass(frozen=True)
class PadeScheme:
    m: int
    theta: float
    pi: int

    @property
    def name(self) -> str:
        return f"pade{self.m}"

    @property
    def cost(self) -> Fraction:
        return self.pi + INVERSE_COST


PADE_SCHEMES = {m: PadeScheme(m, th, pi) for m, (th, pi) in PADE_THETA.items()}


def pade_coefficients(m: int) -> list[float]:
    """Coefficients of the numerator of the [m/m] approximant of exp(x)."""
    return [
        math.factorial(2 * m - k) * math.factorial(m) / (math.factorial(2 * m) * math.factorial(k) * math.factorial(m - k))
        for k in range(m + 1)
    ]


def _pade_uv(m: int, X: np.ndarray, ledger: CostLedger):
    """Odd part ``U`` and even part ``V`` of ``p_m(X)``."""
    b = pade_coefficients(m)
    I = np.eye(X.shape[0], dtype=X.dtype)
    X2 = mat_mul(X, X, ledger)
    if m == 2:
        return b[1] * X, b[0] * I + b[2] * X2
    X4 = mat_mul(X2, X2, ledger) if m >= 4 else None
    if m == 3:
        return mat_mul(X, b[3] * X2 + b[1] * I, ledger), b[2] * X2 + b[0] * I
    if m in (4, 5):
        odd = b[3] * X2 + b[1] * I + (b[5] * X4 if m == 5 else 0)
        return mat_mul(X, odd, ledger), b[4] * X4 + b[2] * X2 + b[0] * I
    X6 = mat_mul(X4, X2, ledger)
    if m == 7:
        U = mat_mul(X, b[7] * X6 + b[5] * X4 + b[3] * X2 + b[1] * I, ledger)
        return U, b[6] * X6 + b[4] * X4 + b[2] * X2 + b[0] * I
    if m == 9:
        X8 = mat_mul(X4, X4, ledger)
        U = mat_mul(X, b[9] * X8 + b[7] * X6 + b[5] * X4 + b[3] * X2 + b[1] * I, ledger)
        return U, b[8] * X8 + b[6] * X6 + b[4] * X4 + b[2] * X2 + b[0] * I
    if m == 13:
        W = mat_mul(X6, b[13] * X6 + b[11] * X4 + b[9] * X2, ledger)
        U = mat_mul(X, W + b[7] * X6 + b[5] * X4 + b[3] * X2 + b[1] * I, ledger)
        V = mat_mul(X6, b[12] * X6 + b[10] * X4 + b[8] * X2, ledger)
        return U, V + b[6] * X6 + b[4] * X4 + b[2] * X2 + b[0] * I
    raise ValueError(f"unsupported Pade degree {m}")


def eval_pade(scheme: PadeScheme | int, A, ledger: CostLedger) -> np.ndarray:
    """``r_m(-iA) = p_m(-iA) p_m(iA)^{-1}`` with ``scheme.pi`` products and one inverse."""
    if not isinstance(scheme, PadeScheme):
        scheme = PADE_SCHEMES[scheme]
    X = -1j * np.asarray(A, dtype=complex)
    U, V = _pade_uv(scheme.m, X, ledger)
    # p_m(X) = V + U and p_m(-X) = V - U commute, so the side of the solve is immaterial
    return solve_right(V - U, V + U, ledger)


# -- selection -----------------------------------------------------------------


@dataclass(frozen=True)
class SelectionPlan:
    scheme: ExpScheme | CosSinScheme | PadeScheme
    s: int
    shift: ShiftData
    predicted_cost: Fraction
    # products charged per squaring step
    step_cost: int = field(default=1, repr=False)

    @property
    def family(self) -> str:
        if isinstance(self.scheme, CosSinScheme):
            return "cossin"
        if isinstance(self.scheme, PadeScheme):
            return "pade"
        return "cheb"


def _check_tol(tol: float) -> None:
    if tol != UNIT_ROUNDOFF:
        raise NotImplementedError("only tol = 2**-53 is supported")


def _select(schemes, beta: float, step_cost: int, base_cost, force_s: int | None = None):
    if not math.isfinite(beta) or beta < 0:
        raise ValueError(f"beta must be finite and nonnegative, got {beta}")
    best = None
    s_range = [force_s] if force_s is not None else range(MAX_SQUARINGS + 1)
    for s in s_range:
        b = math.ldexp(beta, -s)
        for sch in schemes:
            if b > sch.theta:
                continue
            cost = Fraction(base_cost(sch)) + step_cost * s
            margin = sch.theta / b if b > 0 else math.inf
            key = (cost, -margin)
            if best is None or key < best[0]:
                best = (key, sch, s)
    if best is None:
        raise ValueError(
            f"beta = {beta:g} needs more than {MAX_SQUARINGS} squarings"
            if force_s is None
            else f"no scheme covers beta/2^{force_s} = {math.ldexp(beta, -force_s):g}"
        )
    (cost, _), sch, s = best
    return sch, s, cost


def select_exp_plan(beta: float, shift: ShiftData | None = None, force_s: int | None = None) -> SelectionPlan:
    """Cheapest Chebyshev scheme and squaring count for spectral radius bound ``beta``."""
    shift = shift or ShiftData(0.0, beta, False)
    sch, s, cost = _select(EXP_SCHEMES.values(), beta, 1, lambda x: x.pi, force_s)
    return SelectionPlan(sch, s, shift, cost, 1)


def select_cossin_plan(beta: float, shift: ShiftData | None = None, force_s: int | None = None) -> SelectionPlan:
    """Cheapest cos/sin scheme; each double-angle step costs two real products."""
    shift = shift or ShiftData(0.0, beta, False)
    sch, s, cost = _select(COSSIN_SCHEMES.values(), beta, 2, lambda x: x.pi, force_s)
    return SelectionPlan(sch, s, shift, cost, 2)


def select_pade_plan(beta: float, shift: ShiftData | None = None, force_s: int | None = None) -> SelectionPlan:
    shift = shift or ShiftData(0.0, beta, False)
    sch, s, cost = _select(PADE_SCHEMES.values(), beta, 1, lambda x: x.cost, force_s)
    return SelectionPlan(sch, s, shift, cost, 1)


# -- the routes ----------------------------------------------------------------


def _prepare(A, bounds, symmetric: bool):
    A = check_symmetric(A) if symmetric else check_hermitian(A).astype(complex, copy=False)
    sh = shift_data(A, bounds)
    if sh.shifted:
        A = A - sh.alpha * np.eye(A.shape[0], dtype=A.dtype)
    return A, sh


def expm_skew_hermitian(
    A,
    bounds: SpectralBounds | None = None,
    ledger: CostLedger | None = None,
    *,
    tol: float = UNIT_ROUNDOFF,
    force_s: int | None = None,
) -> np.ndarray:
    """``exp(-i A)`` for Hermitian ``A`` by Chebyshev scheme plus squaring.

    With ``bounds`` the spectrum is centred first and the phase
    ``exp(-i alpha)`` restored at the end (a scalar, no product).
    """
    return expm_with_plan(A, bounds, ledger, tol=tol, force_s=force_s)[0]


def expm_with_plan(A, bounds=None, ledger=None, *, tol=UNIT_ROUNDOFF, force_s=None):
    _check_tol(tol)
    ledger = ledger if ledger is not None else CostLedger()
    Abar, sh = _prepare(A, bounds, symmetric=False)
    plan = select_exp_plan(sh.beta, sh, force_s)
    X = Abar / 2**plan.s
    # with user bounds the radius is controlled by the spectrum, not the 1-norm
    U = polyeval.eval_exp(plan.scheme, X, ledger, check_norm=bounds is None)
    for _ in range(plan.s):
        U = mat_mul(U, U, ledger)
    if sh.shifted:
        U = np.exp(-1j * sh.alpha) * U
    return U, plan


def cosm_sinm(
    A,
    bounds: SpectralBounds | None = None,
    ledger: CostLedger | None = None,
    *,
    tol: float = UNIT_ROUNDOFF,
    force_s: int | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """``(cos A, sin A)`` for real symmetric ``A`` using real products only."""
    C, S, _ = cosm_sinm_with_plan(A, bounds, ledger, tol=tol, force_s=force_s)
    return C, S


def cosm_sinm_with_plan(A, bounds=None, ledger=None, *, tol=UNIT_ROUNDOFF, force_s=None):
    _check_tol(tol)
    ledger = ledger if ledger is not None else CostLedger()
    Abar, sh = _prepare(A, bounds, symmetric=True)
    plan = select_cossin_plan(sh.beta, sh, force_s)
    X = Abar / 2**plan.s
    C, S = polyeval.eval_cossin(plan.scheme, X, ledger, check_norm=bounds is None)
    I = np.eye(C.shape[0])
    for _ in range(plan.s):
        C, S = 2 * mat_mul(C, C, ledger) - I, 2 * mat_mul(S, C, ledger)
    if sh.shifted:
        ca, sa = math.cos(sh.alpha), math.sin(sh.alpha)
        C, S = ca * C - sa * S, ca * S + sa * C
    return C, S, plan


def expm_pade(
    A,
    ledger: CostLedger | None = None,
    bounds: SpectralBounds | None = None,
    *,
    force_s: int | None = None,
) -> np.ndarray:
    """Diagonal Pade baseline for ``exp(-i A)`` with forward-error radii and squaring."""
    return expm_pade_with_plan(A, ledger, bounds, force_s=force_s)[0]


def expm_pade_with_plan(A, ledger=None, bounds=None, *, force_s=None):
    ledger = ledger if ledger is not None else CostLedger()
    Abar, sh = _prepare(A, bounds, symmetric=False)
    plan = select_pade_plan(sh.beta, sh, force_s)
    R = eval_pade(plan.scheme, Abar / 2**plan.s, ledger)
    for _ in range(plan.s):
        R = mat_mul(R, R, ledger)
    if sh.shifted:
        R = np.exp(-1j * sh.alpha) * R
    return R, plan


def expm_diag_oracle(A) -> np.ndarray:
    """``exp(-i A)`` from the eigendecomposition of Hermitian ``A`` (not counted)."""
    A = check_hermitian(A)
    w, V = np.linalg.eigh(A)
    return (V * np.exp(-1j * w)) @ V.conj().T


def cossin_diag_oracle(A) -> tuple[np.ndarray, np.ndarray]:
    """``(cos A, sin A)`` from the eigendecomposition of real symmetric ``A``."""
    A = check_symmetric(A)
    w, V = np.linalg.eigh(A)
    return (V * np.cos(w)) @ V.T, (V * np.sin(w)) @ V.T


# -- library API ---------------------------------------------------------------

BACKENDS = ("cheb", "pade", "diag")


@dataclass
class Result:
    """A computed matrix function with the plan that produced it and its cost."""

    value: object
    plan: SelectionPlan | None
    cost: CostLedger
    backend: str = "cheb"

    def report(self) -> dict:
        out = {"backend": self.backend}
        if self.plan is not None:
            out.update(
                family=self.plan.family,
                scheme=self.plan.scheme.name,
                squarings=self.plan.s,
                alpha=self.plan.shift.alpha,
                beta=self.plan.shift.beta,
                predicted_cost=str(self.plan.predicted_cost),
            )
        out.update(self.cost.as_dict())
        return out


def expm(A, bounds: SpectralBounds | None = None, backend: str = "cheb") -> Result:
    """``exp(-i A)`` for Hermitian ``A`` with a cost report."""
    ledger = CostLedger()
    if backend == "cheb":
        U, plan = expm_with_plan(A, bounds, ledger)
    elif backend == "pade":
        U, plan = expm_pade_with_plan(A, ledger, bounds)
    elif backend == "diag":
        U, plan = expm_diag_oracle(A), None
    else:
        raise ValueError(f"unknown backend {backend!r}; choose from {BACKENDS}")
    return Result(U, plan, ledger, backend)


def cossin(A, bounds: SpectralBounds | None = None, backend: str = "cheb") -> Result:
    """``(cos A, sin A)`` for real symmetric ``A`` with a cost report.

    The ``pade`` backend computes the complex exponential and reads off
    ``cos A = Re exp(-iA)`` and ``sin A = -Im exp(-iA)``.
    """
    ledger = CostLedger()
    if backend == "cheb":
        C, S, plan = cosm_sinm_with_plan(A, bounds, ledger)
        return Result((C, S), plan, ledger, backend)
    A = check_symmetric(A)
    if backend == "pade":
        U, plan = expm_pade_with_plan(A, ledger, bounds)
        return Result((U.real.copy(), -U.imag), plan, ledger, backend)
    if backend == "diag":
        return Result(cossin_diag_oracle(A), None, ledger, backend)
    raise ValueError(f"unknown backend {backend!r}; choose from {BACKENDS}")
