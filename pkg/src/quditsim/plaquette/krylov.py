"""Krylov-subspace ground-state initialization.

Diagonalizes H in span{v, Hv, ..., H^(k-1) v} after Gram-Schmidt
orthonormalization and lifts the lowest eigenvector back to the full space.
"""

from __future__ import annotations

import numpy as np


def krylov_ground_state(h: np.ndarray, start: np.ndarray, dim: int,
                        dep_tol: float = 1e-12):
    """Returns (state, energy, achieved_dim).

    ``achieved_dim`` < ``dim`` signals that the Krylov vectors became
    linearly dependent early (start already in an invariant subspace).
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    v = np.asarray(start, dtype=complex)
    v = v / np.linalg.norm(v)
    basis = [v]
    w = v
    for _ in range(dim - 1):
        w = h @ w
        for b in basis:
            w = w - np.vdot(b, w) * b
        # second orthogonalization pass for numerical stability
        for b in basis:
            w = w - np.vdot(b, w) * b
        nrm = np.linalg.norm(w)
        if nrm < dep_tol:
            break
        w = w / nrm
        basis.append(w)
    q = np.array(basis).T  # (n, k)
    h_small = q.conj().T @ h @ q
    h_small = 0.5 * (h_small + h_small.conj().T)
    evals, evecs = np.linalg.eigh(h_small)
    state = q @ evecs[:, 0]
    return state / np.linalg.norm(state), float(evals[0]), q.shape[1]
