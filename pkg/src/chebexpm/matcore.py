"""Dense matrix primitives and the matrix-product ledger.

Every cost figure reported by this package is a count kept in a
:class:`CostLedger`.  Products are charged when they go through
:func:`mat_mul`; scalar scaling and matrix addition are free.  An inverse
(LU factorization plus ``n`` triangular solves) is charged 4/3 products.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import TextIO

import numpy as np
import scipy.linalg

HERMITIAN_TOL = 1e-13

INVERSE_COST = Fraction(4, 3)


class ConvergenceWarning(RuntimeWarning):
    """An iterative routine stopped before reaching its tolerance."""


@dataclass
class CostLedger:
    """Running count of matrix-matrix products.

    Counts are rationals so totals like ``8 + 1/3`` compare exactly.
    """

    complex_products: Fraction = Fraction(0)
    real_products: Fraction = Fraction(0)
    inverses: int = 0

    @property
    def products(self) -> Fraction:
        return self.complex_products + self.real_products

    @property
    def total_cost(self) -> Fraction:
        return self.complex_products + self.real_products + INVERSE_COST * self.inverses

    def charge(self, other: "CostLedger") -> None:
        """Add the counts of ``other`` into this ledger."""
        self.complex_products += other.complex_products
        self.real_products += other.real_products
        self.inverses += other.inverses

    def as_dict(self) -> dict:
        return {
            "complex_products": str(self.complex_products),
            "real_products": str(self.real_products),
            "inverses": self.inverses,
            "total_cost": str(self.total_cost),
        }


def as_square(A, name: str = "A") -> np.ndarray:
    """Return ``A`` as a square, finite, non-empty 2-D array."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {A.shape}")
    if A.shape[0] == 0:
        raise ValueError(f"{name} must have dimension >= 1")
    if not np.all(np.isfinite(A)):
        raise ValueError(f"{name} has non-finite entries")
    return A


def hermitian_residual(A: np.ndarray) -> float:
    """max|A - A^H| / max|A| (0 for the zero matrix)."""
    scale = np.max(np.abs(A))
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(A - A.conj().T)) / scale)


def check_hermitian(A, tol: float = HERMITIAN_TOL, name: str = "A") -> np.ndarray:
    """Validate a Hermitian matrix (complex or real) and return it as an array."""
    A = as_square(A, name)
    res = hermitian_residual(A)
    if res > tol:
        raise ValueError(f"{name} is not Hermitian (relative residual {res:.3e} > {tol:g})")
    return A


def check_symmetric(A, tol: float = HERMITIAN_TOL, name: str = "A") -> np.ndarray:
    """Validate a real symmetric matrix and return it as a float array."""
    A = as_square(A, name)
    if np.iscomplexobj(A):
        if np.any(A.imag != 0):
            raise ValueError(f"{name} must be real")
        A = A.real
    A = A.astype(np.result_type(A.dtype, np.float64), copy=False)  # keeps longdouble
    res = hermitian_residual(A)
    if res > tol:
        raise ValueError(f"{name} is not symmetric (relative residual {res:.3e} > {tol:g})")
    return A


def one_norm(A) -> float:
    """Maximum absolute column sum."""
    A = as_square(A)
    return float(np.max(np.sum(np.abs(A), axis=0)))


def mat_mul(A: np.ndarray, B: np.ndarray, ledger: CostLedger | None) -> np.ndarray:
    """Matrix product ``A @ B``, charged to ``ledger``.

    A product of two real matrices counts as a real product; anything
    involving a complex operand counts as a complex product.
    """
    if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
        raise ValueError(f"cannot multiply shapes {A.shape} and {B.shape}")
    if ledger is not None:
        if np.iscomplexobj(A) or np.iscomplexobj(B):
            ledger.complex_products += 1
        else:
            ledger.real_products += 1
    return A @ B


def solve_right(P: np.ndarray, Q: np.ndarray, ledger: CostLedger | None) -> np.ndarray:
    """Return ``Q @ inv(P)`` via LU with partial pivoting; charged as one inverse.

    Only used for commuting ``P`` and ``Q`` (Pade), where this equals
    ``inv(P) @ Q``.
    """
    with warnings.catch_warnings():
        # singularity is reported below as LinAlgError
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(P, check_finite=False)
    rcond = np.min(np.abs(np.diag(lu))) / max(np.max(np.abs(np.diag(lu))), np.finfo(float).tiny)
    if rcond < 1e2 * np.finfo(float).eps:
        raise np.linalg.LinAlgError("matrix is numerically singular")
    if ledger is not None:
        ledger.inverses += 1
    # Q P^{-1} = (P^{-T} Q^T)^T
    return scipy.linalg.lu_solve((lu, piv), Q.T, trans=1, check_finite=False).T


def two_norm(A, rtol: float = 1e-10, maxiter: int = 500) -> float:
    """Spectral norm by power iteration on ``A^H A``.

    Emits :class:`ConvergenceWarning` and returns the best estimate if the
    relative change of the Rayleigh quotient has not dropped below ``rtol``
    after ``maxiter`` iterations.
    """
    A = as_square(A)
    n = A.shape[0]
    if not np.any(A):
        return 0.0
    rng = np.random.default_rng(12345)
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    x /= np.linalg.norm(x)
    lam = 0.0
    AH = A.conj().T
    for _ in range(maxiter):
        y = AH @ (A @ x)
        lam_new = float(np.real(np.vdot(x, y)))
        ny = np.linalg.norm(y)
        if ny == 0:
            return 0.0
        x = y / ny
        if abs(lam_new - lam) <= rtol * lam_new:
            return math.sqrt(lam_new)
        lam = lam_new
    warnings.warn(
        f"two_norm: power iteration did not converge in {maxiter} iterations",
        ConvergenceWarning,
        stacklevel=2,
    )
    return math.sqrt(lam)


# -- text format -------------------------------------------------------------
#
# line 1: n
# then n rows of n whitespace-separated entries: "re" or "re,im".


def read_matrix(stream: TextIO) -> np.ndarray:
    lines = [ln.strip() for ln in stream.read().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the dimension, got {lines[0]!r}") from None
    if n < 1:
        raise ValueError("dimension must be positive")
    rows = lines[1:]
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, got {len(rows)}")
    is_complex = any("," in r for r in rows)
    A = np.zeros((n, n), dtype=complex if is_complex else float)
    for i, row in enumerate(rows):
        fields = row.split()
        if len(fields) != n:
            raise ValueError(f"row {i + 1}: expected {n} entries, got {len(fields)}")
        for j, tok in enumerate(fields):
            if "," in tok:
                re, im = tok.split(",")
                A[i, j] = complex(float(re), float(im))
            else:
                A[i, j] = float(tok)
    return as_square(A)


def write_matrix(A, stream: TextIO) -> None:
    # repr() of a float is the shortest string that round-trips exactly
    A = as_square(A)
    n = A.shape[0]
    stream.write(f"{n}\n")
    if np.iscomplexobj(A):
        for row in A:
            stream.write(" ".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row) + "\n")
    else:
        for row in A:
            stream.write(" ".join(repr(float(x)) for x in row) + "\n")
