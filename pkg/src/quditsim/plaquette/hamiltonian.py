"""Single-plaquette SU(3) Yang-Mills in the truncated electric basis.

Basis states are irrep labels |p,q> with 0 <= p,q <= cutoff, ordered
lexicographically with p major. The plaquette operator acts as

    box |p,q> = |p+1,q> + |p-1,q+1> + |p,q-1>

with labels outside the truncation dropped (hard cutoff).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


def casimir(p: int, q: int) -> Fraction:
    """Quadratic Casimir of the (p,q) irrep: (p^2+q^2+pq+3p+3q)/3."""
    if p < 0 or q < 0:
        raise ValueError("p,q must be non-negative")
    return Fraction(p * p + q * q + p * q + 3 * p + 3 * q, 3)


def basis_labels(cutoff: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(cutoff + 1) for q in range(cutoff + 1)]


@dataclass
class PlaquetteHamiltonian:
    cutoff: int
    g: float
    matrix: np.ndarray
    labels: list

    def index(self, p: int, q: int) -> int:
        return p * (self.cutoff + 1) + q


def build_plaquette_hamiltonian(g: float, cutoff: int) -> PlaquetteHamiltonian:
    """H = 2 g^2 C(p,q) + (1/2g^2) (6 - box - box^dagger)."""
    if g <= 0:
        raise ValueError("g must be positive")
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    labels = basis_labels(cutoff)
    idx = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    h = np.zeros((n, n))
    for (p, q), i in idx.items():
        h[i, i] = 2 * g**2 * float(casimir(p, q)) + 3.0 / g**2
        # box connects (p,q) -> (p+1,q), (p-1,q+1), (p,q-1)
        for dst in ((p + 1, q), (p - 1, q + 1), (p, q - 1)):
            j = idx.get(dst)
            if j is not None:
                h[j, i] -= 1.0 / (2 * g**2)
                h[i, j] -= 1.0 / (2 * g**2)
    return PlaquetteHamiltonian(cutoff, g, h, labels)
