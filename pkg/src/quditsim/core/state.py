"""Statevectors and density matrices over registers of qubits or qutrits."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .kernels import apply_matrix


@dataclass
class StateVector:
    """Complex amplitudes over d^n basis states.

    Site 0 is the least significant digit of the basis index. A basis label
    written as a string ("0110...") is read right to left: the rightmost
    character is site 0.
    """

    dim_local: int
    n_sites: int
    amps: np.ndarray = field(default=None)

    def __post_init__(self):
        dim = self.dim_local**self.n_sites
        if self.amps is None:
            self.amps = np.zeros(dim, dtype=complex)
            self.amps[0] = 1.0
        else:
            self.amps = np.asarray(self.amps, dtype=complex).reshape(dim)

    @classmethod
    def basis(cls, dim_local: int, n_sites: int, index) -> "StateVector":
        """Basis state from an integer index or a right-to-left digit string."""
        if isinstance(index, str):
            if len(index) != n_sites:
                raise ValueError("label length does not match register size")
            index = int(index, dim_local)
        amps = np.zeros(dim_local**n_sites, dtype=complex)
        amps[index] = 1.0
        return cls(dim_local, n_sites, amps)

    @property
    def dim(self) -> int:
        return self.dim_local**self.n_sites

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def normalized(self) -> "StateVector":
        return StateVector(self.dim_local, self.n_sites, self.amps / self.norm())

    def digit(self, basis_index: int, site: int) -> int:
        return (basis_index // self.dim_local**site) % self.dim_local

    def apply_matrix(self, mat: np.ndarray, targets) -> "StateVector":
        """Apply a d^k x d^k matrix to the listed sites (targets[0] = least
        significant digit of the matrix index)."""
        targets = tuple(targets)
        if len(set(targets)) != len(targets):
            raise ValueError("duplicate target sites")
        for t in targets:
            if not 0 <= t < self.n_sites:
                raise ValueError(f"site {t} out of range")
        m = self.dim_local ** len(targets)
        if mat.shape != (m, m):
            raise ValueError("matrix dimension does not match target count")
        out = apply_matrix(self.amps, mat, targets, self.dim_local, self.n_sites)
        return StateVector(self.dim_local, self.n_sites, out)

    def overlap(self, other: "StateVector") -> complex:
        return complex(np.vdot(other.amps, self.amps))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def tensor(self, other: "StateVector") -> "StateVector":
        """Tensor product; ``other`` occupies the new high-order sites."""
        if other.dim_local != self.dim_local:
            raise ValueError("local dimensions differ")
        return StateVector(self.dim_local, self.n_sites + other.n_sites,
                           np.kron(other.amps, self.amps))


@dataclass
class DensityMatrix:
    """Square complex matrix; Hermitian with unit trace for physical states.

    Positivity is not guaranteed (tomography reconstructions may carry small
    negative eigenvalues before projection).
    """

    dim_local: int
    n_sites: int
    matrix: np.ndarray

    def __post_init__(self):
        dim = self.dim_local**self.n_sites
        self.matrix = np.asarray(self.matrix, dtype=complex).reshape(dim, dim)

    @classmethod
    def from_state(cls, state: StateVector) -> "DensityMatrix":
        return cls(state.dim_local, state.n_sites,
                   np.outer(state.amps, state.amps.conj()))

    @property
    def dim(self) -> int:
        return self.dim_local**self.n_sites

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def is_hermitian(self, tol: float = 1e-10) -> bool:
        return bool(np.max(np.abs(self.matrix - self.matrix.conj().T)) < tol)


def reduced_density(state: StateVector, keep) -> DensityMatrix:
    """Partial trace over the complement of ``keep`` (a set of site indices).

    Sites in the reduced matrix are ordered by ascending original index,
    keeping the least-significant-first convention.
    """
    keep = sorted(set(keep))
    if not keep:
        raise ValueError("keep set must be nonempty")
    if any(s < 0 or s >= state.n_sites for s in keep):
        raise ValueError("keep site out of range")
    d, n = state.dim_local, state.n_sites
    tensor = state.amps.reshape([d] * n)
    # numpy axis for site s is n-1-s
    keep_axes = [n - 1 - s for s in reversed(keep)]
    rest_axes = [a for a in range(n) if a not in keep_axes]
    perm = keep_axes + rest_axes
    t = np.transpose(tensor, perm).reshape(d ** len(keep), -1)
    rho = t @ t.conj().T
    return DensityMatrix(d, len(keep), rho)
