"""Exact time evolution exp(-iHt)|psi>."""

from __future__ import annotations

import numpy as np
from scipy.linalg import expm
from scipy.sparse.linalg import expm_multiply

from .pauli import OperatorSum
from .state import StateVector

DENSE_THRESHOLD = 4096


def evolve_exact(state: StateVector, hamiltonian: OperatorSum, t: float,
                 check_hermitian: bool = True) -> StateVector:
    """exp(-iHt)|psi> via dense expm for dim <= 4096, Krylov-style sparse
    expm-times-vector above."""
    if hamiltonian.dim != state.dim:
        raise ValueError("dimension mismatch")
    if check_hermitian and not hamiltonian.is_hermitian():
        raise ValueError("Hamiltonian is not Hermitian")
    if t == 0:
        return StateVector(state.dim_local, state.n_sites, state.amps.copy())
    if state.dim <= DENSE_THRESHOLD:
        u = expm(-1j * t * hamiltonian.to_matrix())
        out = u @ state.amps
    else:
        out = expm_multiply(-1j * t * hamiltonian.to_sparse(), state.amps)
    return StateVector(state.dim_local, state.n_sites, out)


def evolve_matrix(amps: np.ndarray, h_matrix, t: float) -> np.ndarray:
    """Same contract for a raw (dense or sparse) matrix and amplitude array."""
    if h_matrix.shape[0] <= DENSE_THRESHOLD and not hasattr(h_matrix, "tocsr"):
        return expm(-1j * t * h_matrix) @ amps
    return expm_multiply(-1j * t * h_matrix, amps)
