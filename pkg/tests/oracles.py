"""Independent reference implementations used only by the tests.

None of these call into the package or into LAPACK eigensolvers.
"""

import math

import numpy as np


def jacobi_eigh(S, tol=1e-15, max_sweeps=60):
    """Eigenvalues and eigenvectors of a real symmetric matrix by cyclic Jacobi rotations."""
    A = np.array(S, dtype=float)
    n = A.shape[0]
    V = np.eye(n)
    scale = max(np.max(np.abs(A)), 1e-300)
    for _ in range(max_sweeps):
        off = math.sqrt(np.sum((A - np.diag(np.diag(A))) ** 2))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                tau = (A[q, q] - A[p, p]) / (2 * apq)
                if abs(tau) > 1e150:
                    t = 1 / (2 * tau)
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1 + tau * tau))
                c = 1 / math.sqrt(1 + t * t)
                s = t * c
                ap, aq = A[:, p].copy(), A[:, q].copy()
                A[:, p], A[:, q] = c * ap - s * aq, s * ap + c * aq
                ap, aq = A[p, :].copy(), A[q, :].copy()
                A[p, :], A[q, :] = c * ap - s * aq, s * ap + c * aq
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p], V[:, q] = c * vp - s * vq, s * vp + c * vq
    return np.diag(A).copy(), V


def _real_embedding(A):
    A = np.asarray(A, dtype=complex)
    return np.block([[A.real, -A.imag], [A.imag, A.real]])


def hermitian_function(A, f):
    """``f(A)`` for Hermitian ``A`` and real-valued ``f``, through the real
    symmetric embedding ``[[Re A, -Im A], [Im A, Re A]]``."""
    n = A.shape[0]
    w, V = jacobi_eigh(_real_embedding(A))
    F = (V * f(w)) @ V.T
    return F[:n, :n] + 1j * F[n:, :n]


def expm_minus_i(A):
    return hermitian_function(A, np.cos) - 1j * hermitian_function(A, np.sin)


def eigvalsh(A):
    """Eigenvalues of a Hermitian matrix (each once), ascending."""
    w, _ = jacobi_eigh(_real_embedding(A))
    return np.sort(w)[::2]


def spectral_norm(A):
    """Largest singular value via Jacobi on ``A^H A``."""
    A = np.asarray(A, dtype=complex)
    G = A.conj().T @ A
    w = eigvalsh((G + G.conj().T) / 2)
    return math.sqrt(max(w[-1], 0.0))


def random_hermitian(rng, n, norm1, real=False):
    X = rng.standard_normal((n, n))
    if not real:
        X = X + 1j * rng.standard_normal((n, n))
    H = (X + X.conj().T) / 2
    return H * (norm1 / np.max(np.sum(np.abs(H), axis=0)))


def rosen_zener_by_index(k, f1, f2):
    """``f1 sigma1 (x) I_k + f2 sigma2 (x) tridiag(1, 0, 1)`` entry by entry."""
    s1 = {(0, 1): 1, (1, 0): 1}
    s2 = {(0, 1): -1j, (1, 0): 1j}
    H = np.zeros((2 * k, 2 * k), dtype=complex)
    for a in range(2):
        for b in range(2):
            for i in range(k):
                for j in range(k):
                    v = 0
                    if i == j:
                        v += f1 * s1.get((a, b), 0)
                    if abs(i - j) == 1:
                        v += f2 * s2.get((a, b), 0)
                    H[a * k + i, b * k + j] = v
    return H
