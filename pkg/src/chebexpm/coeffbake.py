"""Derive the double-precision scheme coefficients from the printed literals.

Rounding each printed literal to the nearest double is not good enough for
the larger schemes: the evaluation sequences combine coefficients of size
~3 whose rounding errors do not cancel, and the resulting polynomial is off
by up to ~1e-15 on its interval.  This module

1. refines the literals (Newton, minimum-norm steps, in mpmath) so that the
   expanded polynomial reproduces its target Chebyshev polynomial exactly, and
2. chooses, among the doubles within a few dozen ulps of each refined value,
   an assignment with small maximum error over a grid of the interval.

The result is frozen into :mod:`chebexpm._baked` by running
``python3 -m chebexpm.coeffbake > src/chebexpm/_baked.py``.
"""

from __future__ import annotations

import itertools
import sys

import mpmath as mp
import numpy as np

from . import bounds
from .polyeval import COSSIN_SCHEMES, EXP_SCHEMES, CosSinScheme, ExpScheme, Poly, poly_mul

WORK_DPS = 50
_H = "1e-22"  # relative finite-difference step

# The printed CS24a sine coefficients cannot be refined: z5 c24 duplicates the
# z6 c24 term of C48, leaving 11 effective unknowns for the 12 odd-degree
# conditions, and the printed values deviate from the Chebyshev sine by
# relative amounts growing to 0.13 at degree 21.  Its sine is kept as printed
# (nearest doubles) and only its cosine is baked.
_SINE_AS_PRINTED = {"CS24a"}


def _fits_sine(scheme) -> bool:
    return isinstance(scheme, CosSinScheme) and scheme.variant not in _SINE_AS_PRINTED


def _expand(scheme, c):
    return scheme.sequence(c, Poly.x(), Poly.one(), poly_mul)


def _targets(scheme):
    """(which, degree, value) triples the expansion must reproduce, and the radius used to scale them."""
    rows = []
    if isinstance(scheme, ExpScheme):
        th = scheme.theta
        p = bounds.cheb_coeffs_exp(scheme.m, th).monomial()
        rows = [(None, k, p[k]) for k in range(scheme.m + 1)]
        return rows, th
    th = scheme.cheb_theta
    p = bounds.cheb_coeffs_exp(scheme.m, th).monomial()
    rows += [(0, k, mp.re(p[k])) for k in range(0, scheme.m + 1, 2)]
    if _fits_sine(scheme):
        rows += [(1, k, -mp.im(p[k])) for k in range(1, scheme.m + 1, 2)]
    return rows, th


def _residual(scheme, c, rows, th):
    P = _expand(scheme, c)
    t = mp.mpf(th)
    out = []
    for which, k, val in rows:
        q = P if which is None else P[which]
        d = (q.coeff(k) - val) * t**k
        out += [mp.re(d), mp.im(d)] if which is None else [d]
    if _fits_sine(scheme) and scheme.sine_exact:
        s = P[1]
        out += [s.coeff(k) * t**k for k in range(scheme.m + 1, s.degree + 1)]
    return out


def refine(scheme, iters: int = 8) -> dict:
    """Printed literals adjusted (relative changes, minimum norm) to hit the target exactly."""
    with mp.workdps(WORK_DPS):
        base = dict(scheme.coeffs_mp)
        keys = [k for k, v in base.items() if v != 0]
        rows, th = _targets(scheme)
        h = mp.mpf(_H)

        def jac(c):
            r0 = _residual(scheme, c, rows, th)
            J = np.zeros((len(r0), len(keys)))
            for j, k in enumerate(keys):
                c2 = dict(c)
                c2[k] = c[k] * (1 + h)
                J[:, j] = [float((a - b) / h) for a, b in zip(_residual(scheme, c2, rows, th), r0)]
            return J, r0

        c = dict(base)
        J, r = jac(c)
        for _ in range(iters):
            dt, *_ = np.linalg.lstsq(J, -np.array([float(x) for x in r]), rcond=None)
            for j, k in enumerate(keys):
                c[k] = c[k] * (1 + mp.mpf(dt[j]))
            r = _residual(scheme, c, rows, th)
            if max(abs(x) for x in r) < mp.mpf(10) ** (-WORK_DPS + 8):
                break
        return c


def _to_double(v):
    if isinstance(v, mp.mpc):
        return complex(0.0, float(mp.im(v)))
    return float(v)


def _component(v) -> float:
    return v.imag if isinstance(v, complex) else v


def _shift(v, n: int):
    x = np.float64(_component(v))
    x = x + n * np.spacing(x) if n else x  # neighbouring doubles (same binade)
    x = float(x)
    return complex(0.0, x) if isinstance(v, complex) else x


def _grid(scheme, npts: int):
    th = scheme.theta
    return [mp.mpf(th) * (2 * mp.mpf(i) / (npts - 1) - 1) for i in range(npts)]


def _error_parts(scheme, c, keys, ys):
    """Grid error of the exact-coefficient polynomial and its derivative per relative parameter change."""
    h = mp.mpf(_H)

    def values(cc):
        P = _expand(scheme, cc)
        polys = [P] if isinstance(scheme, ExpScheme) else list(P)[: 2 if _fits_sine(scheme) else 1]
        return [[mp.polyval(q.c[::-1], y) for y in ys] for q in polys]

    v0 = values(c)
    if isinstance(scheme, ExpScheme):
        ref = [[mp.expj(-y) for y in ys]]
    else:
        ref = [[mp.cos(y) for y in ys], [mp.sin(y) for y in ys]][: len(v0)]
    e0 = np.concatenate([np.array([complex(a - b) for a, b in zip(vs, rs)]) for vs, rs in zip(v0, ref)])
    G = np.zeros((e0.size, len(keys)), dtype=complex)
    for j, k in enumerate(keys):
        c2 = dict(c)
        c2[k] = c[k] * (1 + h)
        vj = values(c2)
        G[:, j] = np.concatenate(
            [np.array([complex((a - b) / h) for a, b in zip(vs, ws)]) for vs, ws in zip(vj, v0)]
        )
    return e0, G


def _lll(B: np.ndarray, delta: float = 0.99):
    """LLL reduction of the columns of ``B``; returns ``(B U, U)`` with ``U`` unimodular."""
    B = B.copy()
    n = B.shape[1]
    U = np.eye(n)

    def gram_schmidt():
        Q = np.zeros_like(B)
        mu = np.zeros((n, n))
        nn = np.zeros(n)
        for i in range(n):
            v = B[:, i].copy()
            for j in range(i):
                mu[i, j] = B[:, i] @ Q[:, j] / nn[j]
                v -= mu[i, j] * Q[:, j]
            Q[:, i] = v
            nn[i] = v @ v
        return mu, nn

    mu, nn = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k, j])
            if q:
                B[:, k] -= q * B[:, j]
                U[:, k] -= q * U[:, j]
                mu, nn = gram_schmidt()
        if nn[k] >= (delta - mu[k, k - 1] ** 2) * nn[k - 1]:
            k += 1
        else:
            B[:, [k, k - 1]] = B[:, [k - 1, k]]
            U[:, [k, k - 1]] = U[:, [k - 1, k]]
            mu, nn = gram_schmidt()
            k = max(k - 1, 1)
    return B, U


def _babai(B: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Nearest-plane rounding: integer ``x`` with ``B x`` close to ``t``."""
    Q, R = np.linalg.qr(B)
    y = Q.T @ t
    x = np.zeros(B.shape[1])
    for i in range(B.shape[1] - 1, -1, -1):
        x[i] = round((y[i] - R[i, i + 1:] @ x[i + 1:]) / R[i, i])
    return x


def bake(scheme, npts: int = 801, penalty: float = 1e-18, verbose: bool = False) -> dict:
    """Double coefficients for ``scheme`` (see module docstring).

    The grid error is linear in the ulp offsets ``n`` from the nearest
    doubles, so choosing them is a closest-vector problem; it is solved
    approximately by LLL + Babai on ``[G; penalty I] n ~ [-e; 0]``, where
    the penalty keeps the offsets small, followed by a pairwise minimax
    polish.
    """
    with mp.workdps(WORK_DPS):
        exact = refine(scheme)
        keys = [k for k, v in exact.items() if v != 0]
        ys = _grid(scheme, npts)
        e0, G = _error_parts(scheme, exact, keys, ys)
        near = {k: _to_double(exact[k]) for k in keys}
        t_near = np.array([float(mp.re((mp.mpmathify(near[k]) - exact[k]) / exact[k])) for k in keys])
        # relative change of each coefficient per ulp step
        ulp = np.array([float(np.spacing(np.float64(_component(near[k])))) / _component(near[k]) for k in keys])
    e = e0 + G @ t_near
    if verbose:
        print(f"# {scheme.name}: nearest-double grid error {np.max(np.abs(e)):.3e}", file=sys.stderr)
    Gu = G * ulp
    B = np.vstack([Gu.real, Gu.imag, penalty * np.eye(len(keys))])
    t = -np.concatenate([e.real, e.imag, np.zeros(len(keys))])
    scale = 1 / penalty
    Bred, U = _lll(B * scale)
    n = np.rint(U @ _babai(Bred, t * scale)).astype(int)
    e = e + Gu @ n
    best = np.max(np.abs(e))
    for _ in range(20):
        improved = False
        for a, b in itertools.combinations(range(len(keys)), 2):
            steps = np.arange(-2, 3)
            tot = e[None, None, :] + (steps[:, None] * Gu[:, a])[:, None, :] + (steps[:, None] * Gu[:, b])[None, :, :]
            score = np.max(np.abs(tot), axis=2)
            i, j = np.unravel_index(np.argmin(score), score.shape)
            if score[i, j] < best * (1 - 1e-9):
                best, e = score[i, j], tot[i, j]
                n[a] += steps[i]
                n[b] += steps[j]
                improved = True
        if not improved:
            break
    if verbose:
        print(f"# {scheme.name}: searched grid error {best:.3e} (max offset {np.max(np.abs(n))} ulp)", file=sys.stderr)
    out = {}
    offsets = dict(zip(keys, n))
    for k, v in scheme.coeffs_mp.items():
        out[k] = _shift(near[k], int(offsets[k])) if k in offsets else _to_double(v)
    return out


def _literal(v) -> str:
    if isinstance(v, complex):
        return f"complex(0.0, float.fromhex({v.imag.hex()!r}))"
    return f"float.fromhex({v.hex()!r})"


def main() -> None:
    print('"""Double-precision scheme coefficients, generated by ``python3 -m chebexpm.coeffbake``."""')
    print()
    print("BAKED = {")
    schemes = [(m, s) for m, s in EXP_SCHEMES.items()] + [(v, s) for v, s in COSSIN_SCHEMES.items()]
    for key, s in schemes:
        coeffs = bake(s, verbose=True)
        print(f"    {key!r}: {{")
        for k, v in coeffs.items():
            print(f"        {k!r}: {_literal(v)},")
        print("    },")
    print("}")


if __name__ == "__main__":
    main()
