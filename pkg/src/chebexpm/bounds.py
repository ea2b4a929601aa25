"""Forward error bounds and validity radii for polynomial and Pade
approximations of ``exp(-i y)`` on ``[-theta, theta]``.

Everything here runs in extended precision (mpmath) and is only needed to
generate or check the tables; the runtime schemes in :mod:`chebexpm.polyeval`
use baked double-precision coefficients.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath as mp
import numpy as np

UNIT_ROUNDOFF = 2.0**-53

# working precision (decimal digits) for coefficient generation
DPS = 40


_MINUS_I_POW = (mp.mpc(1), mp.mpc(0, -1), mp.mpc(-1), mp.mpc(0, 1))


class BoundKind(enum.Enum):
    TAYLOR = "TaylorT"
    CHEB_C1 = "ChebC1"
    CHEB_C2 = "ChebC2"
    CHEB_C3 = "ChebC3"
    PADE = "PadeP"


@dataclass(frozen=True)
class ChebCoeffSet:
    """Coefficients of ``c0/2 + sum_k c_k T_k(y/theta)`` approximating exp(-i y)."""

    m: int
    theta: mp.mpf
    c: tuple

    def series_value(self, y):
        """Evaluate the series at a scalar ``y`` in extended precision (Clenshaw)."""
        with mp.workdps(DPS):
            x = mp.mpf(y) / self.theta
            b1 = b2 = mp.mpc(0)
            for ck in reversed(self.c[1:]):
                b1, b2 = 2 * x * b1 - b2 + ck, b1
            return x * b1 - b2 + self.c[0] / 2

    def monomial(self) -> list:
        """Coefficients ``p_j`` with ``P(y) = sum_j p_j y**j``."""
        with mp.workdps(DPS + 20):
            m = self.m
            # integer coefficients of T_k in the monomial basis
            T = [[mp.mpf(1)], [mp.mpf(0), mp.mpf(1)]]
            for k in range(2, m + 1):
                nxt = [mp.mpf(0)] * (k + 1)
                for j, t in enumerate(T[k - 1]):
                    nxt[j + 1] += 2 * t
                for j, t in enumerate(T[k - 2]):
                    nxt[j] -= t
                T.append(nxt)
            p = [mp.mpc(0)] * (m + 1)
            p[0] = self.c[0] / 2
            for k in range(1, m + 1):
                for j, t in enumerate(T[k]):
                    if t:
                        p[j] += self.c[k] * t / self.theta**j
            return [+x for x in p]

    def as_complex(self) -> np.ndarray:
        return np.array([complex(x) for x in self.c])


def _check_bessel_args(k: int, theta) -> None:
    if not isinstance(k, (int, np.integer)) or k < 0 or k > 200:
        raise ValueError(f"Bessel order must be an integer in [0, 200], got {k!r}")
    if not 0 <= theta <= 50:
        raise ValueError(f"Bessel argument must lie in [0, 50], got {theta!r}")


@lru_cache(maxsize=None)
def _bessel_j(k: int, theta: mp.mpf) -> mp.mpf:
    # ascending series sum_j (-1)^j (theta/2)^(2j+k) / (j! (j+k)!);
    # the largest term is ~ e^theta, hence the extra digits
    extra = int(math.ceil(0.45 * float(theta))) + 5
    with mp.workdps(DPS + extra):
        h = mp.mpf(theta) / 2
        term = h**k / mp.factorial(k)
        total = term
        q = -h * h
        j = 0
        eps = mp.mpf(10) ** (-(DPS + extra))
        while True:
            j += 1
            term = term * q / (j * (j + k))
            total += term
            if abs(term) <= eps * abs(total) or term == 0:
                if j > h:
                    break
    # round at DPS here, not at the caller's precision: the value is cached
    with mp.workdps(DPS):
        return +total


def bessel_j(k: int, theta) -> mp.mpf:
    """Bessel function of the first kind ``J_k(theta)`` in extended precision."""
    theta = mp.mpf(theta)
    _check_bessel_args(k, theta)
    return _bessel_j(int(k), theta)


def cheb_coeffs_exp(m: int, theta) -> ChebCoeffSet:
    """Chebyshev coefficients of exp(-i y) on [-theta, theta] from Bessel values.

    ``c_k = 2 (-i)^k J_k(theta)``.
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    theta = mp.mpf(theta)
    if theta <= 0:
        raise ValueError("theta must be positive")
    with mp.workdps(DPS):
        c = tuple(2 * _MINUS_I_POW[k % 4] * bessel_j(k, theta) for k in range(m + 1))
    return ChebCoeffSet(m, theta, c)


def cheb_coeffs_quadrature(m: int, theta, nodes: int | None = None) -> ChebCoeffSet:
    """Same coefficients from Gauss-Chebyshev quadrature of

    ``c_k = 2/pi * int_{-1}^{1} exp(-i theta y) T_k(y) / sqrt(1 - y^2) dy``.
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    theta = mp.mpf(theta)
    if theta <= 0:
        raise ValueError("theta must be positive")
    n = 4 * m + 64 if nodes is None else nodes
    with mp.workdps(DPS):
        phis = [(2 * j - 1) * mp.pi / (2 * n) for j in range(1, n + 1)]
        f = [mp.expj(-theta * mp.cos(phi)) for phi in phis]
        c = tuple(
            2 * mp.fsum(fj * mp.cos(k * phi) for fj, phi in zip(f, phis)) / n
            for k in range(m + 1)
        )
    return ChebCoeffSet(m, theta, c)


# -- error bounds -----------------------------------------------------------


def _taylor(m: int, theta: float) -> float:
    return float(mp.mpf(theta) ** (m + 1) / mp.factorial(m + 1))


def _cheb_c1(m: int, theta: float) -> float:
    q = 2 * m + 2
    return float(4 * (mp.e ** (1 - mp.mpf(theta) ** 2 / q**2) * theta / q) ** (m + 1))


def _c2_log_bound(m: int, theta: float, rho: float) -> float:
    return math.log(2) + theta / 2 * (rho + 1 / rho) - m * math.log(rho) - math.log(rho - 1)


def c2_optimal_rho(m: int, theta: float, rho_max: float | None = None) -> float:
    """Golden-section minimizer of the Bernstein-ellipse bound over rho.

    The optimum sits near ``2(m+1)/theta``; the default window
    ``(1, max(50, 4(m+1)/theta)]`` keeps it interior for every theta.
    """
    if rho_max is None:
        rho_max = max(50.0, 4 * (m + 1) / theta)
    # search in log(rho - 1) so the left end near rho=1 is resolved
    a, b = math.log(1e-12), math.log(rho_max - 1)
    g = lambda s: _c2_log_bound(m, theta, 1 + math.exp(s))  # noqa: E731
    invphi = (math.sqrt(5) - 1) / 2
    c, d = b - invphi * (b - a), a + invphi * (b - a)
    fc, fd = g(c), g(d)
    while b - a > 1e-8:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = g(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = g(d)
    return 1 + math.exp((a + b) / 2)


def _cheb_c2(m: int, theta: float) -> float:
    rho = c2_optimal_rho(m, theta)
    return math.exp(_c2_log_bound(m, theta, rho))


def _cheb_c3(m: int, theta: float) -> float:
    if m + 1 > 200:
        raise ValueError("ChebC3 bound supports m < 200")
    total = mp.mpf(0)
    for k in range(m + 1, 401):
        term = 2 * abs(bessel_j(k, theta))
        total += term
        if term < 1e-30 and k > theta:
            break
    return float(total)


@dataclass(frozen=True)
class PadeSeries:
    """Taylor coefficients ``d_k`` of ``r_m(-i y) - exp(-i y)`` for k = 2m+1..K."""

    m: int
    K: int
    d: tuple
    low_order_residual: mp.mpf

    def abs_log(self) -> np.ndarray:
        """``log|d_k|`` as doubles (``-inf`` for exact zeros), indexed from 2m+1."""
        return np.array([float(mp.log(abs(x))) if x != 0 else -np.inf for x in self.d])


def pade_numerator(m: int) -> list:
    """Coefficients of ``p_m(x) = sum_j (2m-j)! m! / ((2m)! (m-j)! j!) x^j``."""
    f = mp.factorial
    return [f(2 * m - j) * f(m) / (f(2 * m) * f(m - j) * f(j)) for j in range(m + 1)]


@lru_cache(maxsize=None)
def pade_series(m: int, K: int = 2000) -> PadeSeries:
    """Truncated power series of the diagonal Pade error ``r_m(-iy) - e^{-iy}``."""
    if not 1 <= m <= 13:
        raise ValueError("Pade degree must lie in [1, 13]")
    if not 2 * m + 1 <= K <= 2000:
        raise ValueError("K must lie in [2m+1, 2000]")
    dps = 60
    with mp.workdps(dps):
        b = pade_numerator(m)
        num = [b[j] * mp.mpc(0, -1) ** j for j in range(m + 1)]  # p_m(-iy)
        den = [b[j] * mp.mpc(0, 1) ** j for j in range(m + 1)]   # p_m(iy)
        # 1/p_m(iy) as a power series: linear recurrence on its coefficients
        q = [mp.mpc(0)] * (K + 1)
        q[0] = 1 / den[0]
        for k in range(1, K + 1):
            acc = mp.mpc(0)
            for j in range(1, min(m, k) + 1):
                acc += den[j] * q[k - j]
            q[k] = -acc / den[0]
        d = []
        fact = mp.mpf(1)
        for k in range(K + 1):
            if k:
                fact *= k
            acc = mp.mpc(0)
            for j in range(min(m, k) + 1):
                acc += num[j] * q[k - j]
            d.append(acc - mp.mpc(0, -1) ** k / fact)
        low = max(abs(x) for x in d[: 2 * m + 1])
        if low > mp.mpf(10) ** (-(dps - 15)):
            raise ArithmeticError(
                f"precision exhausted: order conditions of r_{m} hold only to {mp.nstr(low, 3)}"
            )
        return PadeSeries(m, K, tuple(d[2 * m + 1 :]), low)


@lru_cache(maxsize=None)
def _pade_log_abs(m: int, K: int) -> np.ndarray:
    return pade_series(m, K).abs_log()


def _pade(m: int, theta: float, K: int = 2000) -> float:
    logd = _pade_log_abs(m, K)
    k = np.arange(2 * m + 1, K + 1)
    with np.errstate(over="ignore"):
        terms = np.exp(logd + k * math.log(theta))
    # a truncated series that has not started to decay is no bound at all
    if terms[-1] >= terms[-2] and terms[-1] > 0:
        return math.inf
    return float(np.sum(terms))


_BOUNDS = {
    BoundKind.TAYLOR: _taylor,
    BoundKind.CHEB_C1: _cheb_c1,
    BoundKind.CHEB_C2: _cheb_c2,
    BoundKind.CHEB_C3: _cheb_c3,
    BoundKind.PADE: _pade,
}


def eps_bound(kind: BoundKind | str, m: int, theta: float) -> float:
    """Upper bound on ``sup_{|y| <= theta} |P_m(y) - exp(-i y)|``."""
    kind = BoundKind(kind)
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise ValueError(f"degree must be a positive integer, got {m!r}")
    if kind is BoundKind.PADE and m > 13:
        raise ValueError("Pade bound supports m <= 13")
    if kind is BoundKind.CHEB_C3 and m >= 200:
        raise ValueError("ChebC3 bound supports m < 200")
    if not theta > 0:
        raise ValueError("theta must be positive")
    return _BOUNDS[kind](int(m), float(theta))


def theta_max(
    kind: BoundKind | str,
    m: int,
    tol: float = UNIT_ROUNDOFF,
    lo: float = 1e-8,
    hi: float = 64.0,
    rtol: float = 1e-6,
) -> float:
    """Largest theta (first crossing) with ``eps_bound(kind, m, theta) <= tol``.

    The window is scanned geometrically from ``lo`` to find a bracket, which
    is then bisected in log scale to relative width ``rtol``.
    """
    kind = BoundKind(kind)
    f = lambda t: eps_bound(kind, m, t)  # noqa: E731
    if f(lo) > tol:
        raise ValueError(f"{kind.value} m={m}: bound exceeds tol already at theta={lo:g}")
    a = lo
    b = None
    while a < hi:
        t = min(2 * a, hi)
        if f(t) > tol:
            b = t
            break
        a = t
    if b is None:
        raise ValueError(f"{kind.value} m={m}: no crossing of tol={tol:g} in [{lo:g}, {hi:g}]")
    while b / a - 1 > rtol:
        c = math.sqrt(a * b)
        if f(c) <= tol:
            a = c
        else:
            b = c
    # monotonicity on the bracket, sampled
    samples = [f(a * (b / a) ** (i / 4)) for i in range(5)]
    if any(s2 < s1 for s1, s2 in zip(samples, samples[1:])):
        raise ArithmeticError(f"{kind.value} m={m}: bound not monotone near the root")
    return a
