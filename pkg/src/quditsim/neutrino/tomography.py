"""State tomography for qutrit-encoded neutrinos.

Seven independent measurement settings per neutrino suffice to extract all
nine Gell-Mann coefficients c_i = Tr(lam_i rho) / Tr(lam_i^2) (lambda_9 = I):
the settings for lambda_3, lambda_8 and the identity are all computational.
Reconstruction, the closest-physical-density-matrix eigenvalue shift, and
purification to the dominant eigenvector are provided, together with the
fidelity functional F(rho, zeta) = (Tr sqrt(sqrt(zeta) rho sqrt(zeta)))^2.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from ..core.state import StateVector
from .model import gell_mann

_SQ2 = 1 / math.sqrt(2)

# basis-change operators on one qutrit (physical block of the printed
# 4x4 qubit-pair operators); computational "id" covers lam3, lam8 and I
_SETTINGS = {
    "1": _SQ2 * np.array([[1, 1, 0], [1, -1, 0], [0, 0, math.sqrt(2)]]),
    "2": _SQ2 * np.array([[1, -1j, 0], [1, 1j, 0], [0, 0, math.sqrt(2)]]),
    "4": _SQ2 * np.array([[1, 0, 1], [0, math.sqrt(2), 0], [1, 0, -1]]),
    "5": _SQ2 * np.array([[1, 0, -1j], [0, math.sqrt(2), 0], [1, 0, 1j]]),
    "6": _SQ2 * np.array([[math.sqrt(2), 0, 0], [0, 1, 1], [0, 1, -1]]),
    "7": _SQ2 * np.array([[math.sqrt(2), 0, 0], [0, 1, -1j], [0, 1, 1j]]),
    "id": np.eye(3),
}

# which setting measures which coefficient, and the outcome weights of
# c_i = v . P / A_i over the three physical outcomes
_EXTRACT = {
    1: ("1", np.array([1.0, -1.0, 0.0]), 2.0),
    2: ("2", np.array([1.0, -1.0, 0.0]), 2.0),
    3: ("id", np.array([1.0, -1.0, 0.0]), 2.0),
    4: ("4", np.array([1.0, 0.0, -1.0]), 2.0),
    5: ("5", np.array([1.0, 0.0, -1.0]), 2.0),
    6: ("6", np.array([0.0, 1.0, -1.0]), 2.0),
    7: ("7", np.array([0.0, 1.0, -1.0]), 2.0),
    8: ("id", np.array([1.0, 1.0, -2.0]) / math.sqrt(3), 2.0),
    9: ("id", np.array([1.0, 1.0, 1.0]), 3.0),
}


def measurement_settings() -> dict:
    """The seven per-neutrino basis-change matrices, keyed by label."""
    return {k: v.astype(complex).copy() for k, v in _SETTINGS.items()}


def measurement_probabilities(state: StateVector, settings: tuple) -> np.ndarray:
    """Computational-basis outcome probabilities of the basis-changed state,
    flattened with neutrino 0 as the fastest index."""
    if len(settings) != state.n_sites:
        raise ValueError("one setting per neutrino required")
    psi = state
    for site, lab in enumerate(settings):
        psi = psi.apply_matrix(_SETTINGS[lab].astype(complex), (site,))
    return np.abs(psi.amps) ** 2


def tomography(source, n: int = None) -> np.ndarray:
    """Reconstruct the density matrix of n qutrit-encoded neutrinos.

    source: a StateVector (exact probabilities are generated internally) or
    a dict {settings tuple: probability array of length 3^n} covering all
    7^n independent setting combinations.
    """
    if isinstance(source, StateVector):
        n = source.n_sites
        labels = list(_SETTINGS)
        probs = {
            combo: measurement_probabilities(source, combo)
            for combo in itertools.product(labels, repeat=n)
        }
    else:
        probs = source
        if n is None:
            n = len(next(iter(probs)))
    lams = gell_mann() + [np.eye(3, dtype=complex)]
    rho = np.zeros((3**n, 3**n), dtype=complex)
    for idx in itertools.product(range(1, 10), repeat=n):
        combo = tuple(_EXTRACT[i][0] for i in idx)
        p = np.asarray(probs[combo]).reshape((3,) * n)
        c = 1.0
        weight = np.ones(())
        # weight tensor: outer product of per-site extraction vectors,
        # axes ordered like p (site n-1 slowest)
        for i in reversed(idx):
            weight = np.multiply.outer(weight, _EXTRACT[i][1])
            c /= _EXTRACT[i][2]
        c = c * float((weight * p).sum())
        term = np.ones((1, 1), dtype=complex)
        for i in reversed(idx):
            term = np.kron(term, lams[i - 1])
        rho += c * term
    return rho


def closest_physical(rho: np.ndarray) -> np.ndarray:
    """Nearest positive-semidefinite unit-trace matrix by eigenvalue
    shifting, keeping the eigenvectors fixed."""
    rho = np.asarray(rho, dtype=complex)
    rho = rho / np.trace(rho).real
    w, v = np.linalg.eigh((rho + rho.conj().T) / 2)
    w = w.real.copy()
    # zero out negatives from the bottom, spreading the deficit uniformly
    # over the remaining eigenvalues
    order = np.argsort(w)
    acc = 0.0
    for pos, i in enumerate(order):
        remaining = len(w) - pos
        if w[i] + acc / remaining < 0:
            acc += w[i]
            w[i] = 0.0
        else:
            shift = acc / remaining
            for j in order[pos:]:
                w[j] += shift
            break
    w = np.clip(w, 0.0, None)
    w /= w.sum()
    return (v * w) @ v.conj().T


def purify(rho: np.ndarray) -> np.ndarray:
    """Projector onto the dominant eigenvector of rho."""
    w, v = np.linalg.eigh(np.asarray(rho, dtype=complex))
    top = v[:, int(np.argmax(w.real))]
    return np.outer(top, top.conj())


def fidelity(rho: np.ndarray, zeta: np.ndarray) -> float:
    """(Tr sqrt(sqrt(zeta) rho sqrt(zeta)))^2."""
    wz, vz = np.linalg.eigh(np.asarray(zeta, dtype=complex))
    sz = (vz * np.sqrt(np.clip(wz.real, 0.0, None))) @ vz.conj().T
    m = sz @ np.asarray(rho, dtype=complex) @ sz
    wm = np.linalg.eigvalsh((m + m.conj().T) / 2)
    return float(np.sqrt(np.clip(wm.real, 0.0, None)).sum() ** 2)
