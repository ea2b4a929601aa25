"""Minimal-product Chebyshev evaluation of exp(-iA) for Hermitian A and of
cos(A), sin(A) for real symmetric A."""

from .driver import (
    Result,
    SpectralBounds,
    cosm_sinm,
    cossin,
    expm,
    expm_diag_oracle,
    expm_pade,
    expm_skew_hermitian,
)
from .matcore import CostLedger, read_matrix, write_matrix

__all__ = [
    "CostLedger",
    "Result",
    "SpectralBounds",
    "cosm_sinm",
    "cossin",
    "expm",
    "expm_diag_oracle",
    "expm_pade",
    "expm_skew_hermitian",
    "read_matrix",
    "write_matrix",
]
